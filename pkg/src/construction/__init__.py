"""Initial-data construction: bump, packets, nonlinear term, projectors, witnesses."""

from src.construction.params import (
    CARRIER_RATIO,
    ConstructionParams,
    carrier_frequency,
    packet_amplitude,
)
from src.construction.bump import BumpProfile, bump_hat, bump_profile, build_bump
from src.construction.packets import make_g, make_f, make_u0
from src.construction.nonlinear import advection, nonlinear_term, resolved_advection
from src.construction.leray import leray_P, leray_Q, leray_split
from src.construction.witnesses import (
    LemmaTerms,
    WitnessFields,
    i3_from_witnesses,
    lemma_terms,
    make_h,
)

__all__ = [
    'CARRIER_RATIO',
    'ConstructionParams',
    'carrier_frequency',
    'packet_amplitude',
    'BumpProfile',
    'bump_hat',
    'bump_profile',
    'build_bump',
    'make_g',
    'make_f',
    'make_u0',
    'advection',
    'nonlinear_term',
    'resolved_advection',
    'leray_P',
    'leray_Q',
    'leray_split',
    'LemmaTerms',
    'WitnessFields',
    'i3_from_witnesses',
    'lemma_terms',
    'make_h'
]

"""Report schemas shared by the experiment drivers, the CLI and the output layer."""

from src.contracts.schemas import (
    EXPERIMENT_COLUMNS,
    EXPERIMENT_INDEX,
    INFLATION_COLUMNS,
    LEMMA_COLUMNS,
    REMAINDER_COLUMNS,
    CheckOutcome,
    ConstructionEcho,
    ErrorResponse,
    ExperimentReport,
    ReportMetadata,
    SolverEcho,
)

__all__ = [
    'EXPERIMENT_COLUMNS',
    'EXPERIMENT_INDEX',
    'INFLATION_COLUMNS',
    'LEMMA_COLUMNS',
    'REMAINDER_COLUMNS',
    'CheckOutcome',
    'ConstructionEcho',
    'ErrorResponse',
    'ExperimentReport',
    'ReportMetadata',
    'SolverEcho'
]

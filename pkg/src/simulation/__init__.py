"""Simulation modules: pseudo-spectral Euler solver and short-time expansion."""

from src.simulation.euler_solver import (
    SolverConfig,
    Trajectory,
    rhs,
    step,
    solve,
    cfl_bound,
    choose_dt,
)
from src.simulation.taylor import (
    flow,
    linear_departure,
    remainder,
    remainder_norm,
    taylor_coefficient,
    second_variation,
)
from src.simulation.vorticity import streamfunction, jacobian, vorticity_rhs

__all__ = [
    'SolverConfig',
    'Trajectory',
    'rhs',
    'step',
    'solve',
    'cfl_bound',
    'choose_dt',
    'flow',
    'linear_departure',
    'remainder',
    'remainder_norm',
    'taylor_coefficient',
    'second_variation',
    'streamfunction',
    'jacobian',
    'vorticity_rhs'
]

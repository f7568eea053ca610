"""Timed-stream component models: simulation, testing and abstraction checks."""

from ._core import (
    DomainError,
    Error,
    Model,
    ParseError,
    RefusalError,
    SimulationError,
    SpecError,
    check_causality,
    check_correspondence,
    load_model,
    parse_model,
    run_cli,
    run_tests,
    simulate,
    verify_galois,
)

__all__ = [
    "DomainError",
    "Error",
    "Model",
    "ParseError",
    "RefusalError",
    "SimulationError",
    "SpecError",
    "check_causality",
    "check_correspondence",
    "load_model",
    "parse_model",
    "run_cli",
    "run_tests",
    "simulate",
    "verify_galois",
]

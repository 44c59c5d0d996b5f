"""Exact symbolic verification of the converse trisector (Morley) theorem."""
from __future__ import annotations

from .cevian import AdmissibilityError, CevianParams
from .exact_arith import CycloNum, Q, Rational
from .morley_core import (
    REGISTRY, PipelineConfig, PipelineError, StepResult, derived_constant, run_pipeline,
)
from .polyring import MultiPoly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError", "CevianParams", "CycloNum", "MultiPoly", "PipelineConfig",
    "PipelineError", "Q", "REGISTRY", "Rational", "StepResult", "derived_constant",
    "parse_poly", "run_pipeline",
]

"""Cascade noise analysis.

Propagate signal and noise powers through an n-stage chain, compare the
textbook Friis stage factors with corrected (input-referred) stage factors,
and cross-check both against a deterministic Monte Carlo estimate.
"""

from ._core import *  # noqa: F401,F403

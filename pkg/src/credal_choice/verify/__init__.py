"""Fixtures, generators and the verification batteries."""

from .generators import SuiteConfig, gen_random_model
from .suite import BATTERIES, BatteryResult, SuiteReport, run_verify_suite

__all__ = ["BATTERIES", "BatteryResult", "SuiteConfig", "SuiteReport", "gen_random_model",
           "run_verify_suite"]

"""Exact verification of unit groups and 2-class towers for multiquadratic fields."""

from ._mqtower import classify, cli, families, group_claims, invariants, m_exponent, verify

__all__ = ["classify", "cli", "families", "group_claims", "invariants", "m_exponent", "verify"]

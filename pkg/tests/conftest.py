"""Shared fixtures: small named functions and exhaustive enumerations."""

from __future__ import annotations

import itertools

import pytest

from ptfkit import TruthTable, is_threshold, parse_table

XOR2 = parse_table("0110")
XNOR2 = parse_table("1001")
OR2 = parse_table("0111")
AND2 = parse_table("0001")
NAND2 = parse_table("1110")
CONST0_2 = parse_table("0000")
CONST1_2 = parse_table("1111")
XOR3 = parse_table("01101001")


def parity_table(n: int) -> TruthTable:
    bits = tuple(bin(i).count("1") & 1 for i in range(1 << n))
    return TruthTable(n, bits)


def all_tables(n: int):
    """Every n-variable function, in ascending table-code order."""
    for bits in itertools.product((0, 1), repeat=1 << n):
        yield TruthTable(n, bits)


@pytest.fixture(scope="session", autouse=True)
def _warm_lp_kernel():
    # First LP call may JIT-compile the numba kernel; keep that out of
    # individual test timings.
    is_threshold(XOR2)

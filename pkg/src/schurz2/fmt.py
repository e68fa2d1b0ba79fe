"""Shared text/JSON formatting helpers for points, classes and lattices."""

from __future__ import annotations

from .groupring import Gpt, Lattice


def fmt_point(g: Gpt) -> str:
    return f"({g[0]},{g[1]})"


def fmt_class(points) -> str:
    return "{" + ", ".join(fmt_point(g) for g in sorted(points)) + "}"


def json_point(g: Gpt) -> list[int]:
    return [g[0], g[1]]


def json_class(points) -> list[list[int]]:
    return [json_point(g) for g in sorted(points)]


def json_lattice(lattice: Lattice) -> dict:
    return {
        "rank": lattice.rank,
        "basis": [json_point(v) for v in lattice.basis],
        "index": lattice.index,
    }

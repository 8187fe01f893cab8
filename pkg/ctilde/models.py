"""Validated invocations and the JSON records printed by the command line."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ctilde.centralizer import CentralizerReport
from ctilde.garside import GroupElement, Presentation, format_normal_form
from ctilde.germ import GermElement, reflection_length_C
from ctilde.periodic import PeriodicPermutation, format_cycles
from ctilde.reflections import CtildeReflection
from ctilde.settings import DEFAULT_ORBIT_CAP, DEFAULT_WINDOW

# ---------------------------------------------------------------------------
# Invocation
# ---------------------------------------------------------------------------


class Invocation(BaseModel):
    command: str = Field(..., min_length=1)
    n: int = Field(default=2, ge=2, description="Rank of the C-tilde group")
    window: int = Field(default=DEFAULT_WINDOW, ge=1, description="Offset window K")
    format: Literal["text", "json", "svg"] = "text"
    cap: int = Field(default=DEFAULT_ORBIT_CAP, ge=1)
    inputs: list[str] = Field(default_factory=list)


# ---------------------------------------------------------------------------
# Output records
# ---------------------------------------------------------------------------


class ErrorRecord(BaseModel):
    error: str
    detail: str


class PermutationRecord(BaseModel):
    period: int
    window: list[int]
    cycles: str

    @classmethod
    def of(cls, w: PeriodicPermutation) -> "PermutationRecord":
        return cls(period=w.period, window=list(w.window), cycles=format_cycles(w))


class ElementRecord(BaseModel):
    period: int
    cycles: str
    partition: str
    length_A: int
    length_C: int | None = None
    sigma_stable: bool

    @classmethod
    def of(cls, x: GermElement) -> "ElementRecord":
        return cls(
            period=x.period,
            cycles=str(x),
            partition=str(x.partition),
            length_A=x.length_A,
            length_C=reflection_length_C(x) if x.sigma_stable else None,
            sigma_stable=x.sigma_stable,
        )


class ReflectionRecord(BaseModel):
    kind: Literal["long", "paired"]
    transpositions: list[tuple[int, int]]
    text: str

    @classmethod
    def of(cls, rho: CtildeReflection) -> "ReflectionRecord":
        return cls(kind=rho.kind, transpositions=list(rho.transpositions), text=str(rho))


class BooleanRecord(BaseModel):
    result: bool


class NormalFormRecord(BaseModel):
    n: int
    delta_power: int
    body: list[str]
    infimum: int
    supremum: int
    text: str

    @classmethod
    def of(cls, g: GroupElement) -> "NormalFormRecord":
        return cls(
            n=g.n,
            delta_power=g.delta_power,
            body=[str(x) for x in g.body],
            infimum=g.infimum,
            supremum=g.supremum,
            text=format_normal_form(g),
        )


class EqualityRecord(BaseModel):
    equal: bool
    left: NormalFormRecord
    right: NormalFormRecord


class AtomsRecord(BaseModel):
    element: str
    window: int
    complete: bool
    atoms: list[ReflectionRecord]


class DivisorsRecord(BaseModel):
    element: str
    window: int
    complete: bool
    count: int
    divisors: list[ElementRecord]


class PresentationRecord(BaseModel):
    n: int
    window: int
    truncated: bool
    generators: list[str]
    relations: list[str]

    @classmethod
    def of(cls, p: Presentation) -> "PresentationRecord":
        return cls(
            n=p.n,
            window=p.window,
            truncated=p.truncated,
            generators=[str(rho) for rho in p.generators],
            relations=[str(rel) for rel in p.relations],
        )


class HurwitzRecord(BaseModel):
    element: str
    window: int
    search_window: int
    complete: bool
    decompositions: list[list[str]]
    targets: int
    reached: int
    cap: int
    truncated: bool
    transitive: bool


class CentralizerRecord(BaseModel):
    h: int
    n: int
    d: int
    window: int
    fixed_divisors: int
    fixed_atoms: int
    typec_divisors: int
    typec_atoms: int
    lattice_isomorphic: bool
    matches: bool

    @classmethod
    def of(cls, report: CentralizerReport) -> "CentralizerRecord":
        return cls(
            h=report.h,
            n=report.n,
            d=report.d,
            window=report.window,
            fixed_divisors=report.fixed_divisors,
            fixed_atoms=report.fixed_atoms,
            typec_divisors=report.typec_divisors,
            typec_atoms=report.typec_atoms,
            lattice_isomorphic=report.lattice_isomorphic,
            matches=report.matches,
        )


class DrawingRecord(BaseModel):
    element: str
    period: int
    svg: str

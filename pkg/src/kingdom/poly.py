"""Domination polynomials with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DominationPolynomial:
    """``coeffs[k]`` is the number of dominating sets of size ``k``."""

    coeffs: tuple[int, ...]
    nverts: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def eval_at(self, z: int) -> int:
        return eval_at(self, z)

    @property
    def gamma(self) -> int:
        return domination_number(self)

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def check(self) -> None:
        """Raise ``ValueError`` if a structural invariant is broken."""
        n = self.nverts
        c = self.coeffs
        if len(c) != n + 1:
            raise ValueError(f"expected {n + 1} coefficients, got {len(c)}")
        if any(x < 0 for x in c):
            raise ValueError("negative coefficient")
        if c[n] != 1:
            raise ValueError(f"leading coefficient is {c[n]}, expected 1")
        if c[0] != (1 if n == 0 else 0):
            raise ValueError(f"constant term {c[0]} is wrong for {n} vertices")
        support = [k for k, x in enumerate(c) if x]
        if support != list(range(support[0], n + 1)):
            raise ValueError("support is not a contiguous range ending at nverts")
        if self.total % 2 != 1:
            raise ValueError(f"total number of dominating sets {self.total} is even")

    def to_json(self, board: str) -> dict:
        return {
            "board": board,
            "nverts": self.nverts,
            "coeffs": [str(c) for c in self.coeffs],
            "gamma": self.gamma,
            "eval": {"-1": str(self.eval_at(-1)), "1": str(self.eval_at(1))},
        }

    @classmethod
    def from_json(cls, obj: dict) -> DominationPolynomial:
        return cls(tuple(int(c) for c in obj["coeffs"]), int(obj["nverts"]))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else "z" if k == 1 else f"z^{k}"
            terms.append(mono if c == 1 and k else f"{c}" if k == 0 else f"{c}*{mono}")
        return " + ".join(terms) or "0"


def eval_at(p: DominationPolynomial, z: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def domination_number(p: DominationPolynomial) -> int:
    # empty board: nothing to dominate, so zero pieces suffice
    if p.nverts == 0:
        return 0
    for k, c in enumerate(p.coeffs):
        if c:
            return k
    raise ValueError("polynomial has no dominating sets")


def equal(p: DominationPolynomial, q: DominationPolynomial) -> bool:
    return p.coeffs == q.coeffs and p.nverts == q.nverts


def first_difference(p: DominationPolynomial, q: DominationPolynomial) -> int | None:
    """Smallest ``k`` where the coefficient lists disagree, or ``None``."""
    for k in range(max(len(p.coeffs), len(q.coeffs))):
        a = p.coeffs[k] if k < len(p.coeffs) else None
        b = q.coeffs[k] if k < len(q.coeffs) else None
        if a != b:
            return k
    return None

"""Method selection between the brute-force oracle and the transfer DP."""

from __future__ import annotations

from kingdom import oracle, transfer
from kingdom.board import BoardSpec
from kingdom.errors import GuardError, UnsupportedError
from kingdom.poly import DominationPolynomial

METHODS = ("auto", "transfer", "oracle")


def resolve_method(spec: BoardSpec, method: str) -> str:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method != "auto":
        return method
    try:
        transfer.plan_sweep(spec)
    except (UnsupportedError, GuardError):
        return "oracle"
    return "transfer"


def polynomial(
    spec: BoardSpec,
    method: str = "auto",
    *,
    threads: int | None = None,
    prune: bool = True,
    force: bool = False,
) -> DominationPolynomial:
    if resolve_method(spec, method) == "transfer":
        p = transfer.transfer_polynomial(spec, prune=prune)
    else:
        p = oracle.enumerate_polynomial(spec, force=force, threads=threads)
    p.check()
    return p


def evaluate(
    spec: BoardSpec,
    z: int,
    method: str = "auto",
    *,
    threads: int | None = None,
    prune: bool = True,
    force: bool = False,
) -> int:
    if resolve_method(spec, method) == "transfer":
        return transfer.transfer_eval(spec, z, prune=prune)
    if z == -1:
        return oracle.eval_signed_count(spec, force=force, threads=threads)
    return oracle.enumerate_polynomial(spec, force=force, threads=threads).eval_at(z)

"""Lazy conatural numbers, Myhill bijections and the 2 x N-inf adversary."""

from ._comyhill import (  # noqa: F401
    CoNat,
    ComyhillError,
    MyhillConat,
    MyhillNat,
    TwoBijection,
    add,
    adversary,
    epsilon,
    exists,
    families,
    forall,
    inf,
    lift,
    max,
    min,
    myhill_conat,
    myhill_nat,
    myhill_nat_fns,
    nat,
    sub,
    two_bijection,
)

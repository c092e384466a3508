"""The signed-max tensor product rule for crystals, in two- and n-factor form.

For b_1 (x) ... (x) b_n the position profiles are

    eps_k^p = eps_k(b_p) - sum_{q<p} wt_k(b_q),
    phi_k^p = phi_k(b_p) + sum_{q>p} wt_k(b_q),

where wt_k is the coroot pairing of a factor's weight.  The tensor
statistics are the maxima of the profiles; e_k acts on the factor at the
smallest position attaining the eps-maximum, f_k at the largest position
attaining the phi-maximum.  Any factor-level operator returning None
collapses the whole result to None.

One convention only: f_k prefers the LEFT factor on strict inequality
phi_k(b_1) > eps_k(b_2), exactly as the two-factor case is stated.  Other
sources order the tensor factors the other way round; no flag is offered,
since a silent convention switch is the classic source of mismatched
decompositions.

Factors may themselves be tensor elements.  Nesting is preserved, which is
what makes the associativity check meaningful: a nested bracketing and its
flattening must produce the same statistics and mirrored operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .crystal_core import NEG_INF, CrystalElement, ext_max, is_neg_inf
from .root_datum import RootDatum, Weight


@dataclass(frozen=True)
class TensorElement(CrystalElement):
    factors: tuple[CrystalElement, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("tensor element needs at least one factor")

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = self.__dict__["_hash"] = hash(self.factors)
        return h

    def weight(self, rd: RootDatum) -> Weight:
        return reduce(lambda a, b: a + b, (x.weight(rd) for x in self.factors))

    def eps_profile(self, rd: RootDatum, k: int) -> list:
        return list(_profiles(rd, self, k)[0])

    def phi_profile(self, rd: RootDatum, k: int) -> list:
        return list(_profiles(rd, self, k)[1])

    def eps(self, rd: RootDatum, k: int):
        return ext_max(_profiles(rd, self, k)[0])

    def phi(self, rd: RootDatum, k: int):
        return ext_max(_profiles(rd, self, k)[1])

    def e(self, rd: RootDatum, k: int):
        profile = _profiles(rd, self, k)[0]
        top = ext_max(profile)
        if is_neg_inf(top):
            return None
        p = profile.index(top)  # smallest position attaining the max
        return self._apply_at(rd, k, p, "e")

    def f(self, rd: RootDatum, k: int):
        profile = _profiles(rd, self, k)[1]
        top = ext_max(profile)
        if is_neg_inf(top):
            return None
        p = len(profile) - 1 - profile[::-1].index(top)  # largest position
        return self._apply_at(rd, k, p, "f")

    def _apply_at(self, rd, k, p, op):
        moved = getattr(self.factors[p], op)(rd, k)
        if moved is None:
            return None
        factors = self.factors[:p] + (moved,) + self.factors[p + 1 :]
        return TensorElement(factors)

    def serialize(self) -> dict:
        return {"Tensor": [x.serialize() for x in self.factors]}


@lru_cache(maxsize=None)
def _profiles(rd: RootDatum, x: TensorElement, k: int):
    """(eps profile, phi profile) of a tensor element, built in one pass each."""
    eps_out = []
    shift = 0  # running sum of wt_k over factors to the left
    for factor in x.factors:
        ep = factor.eps(rd, k)
        eps_out.append(NEG_INF if is_neg_inf(ep) else ep - shift)
        shift += rd.pairing(k, factor.weight(rd))
    phi_out = []
    shift = 0  # running sum of wt_k over factors to the right
    for factor in reversed(x.factors):
        ph = factor.phi(rd, k)
        phi_out.append(NEG_INF if is_neg_inf(ph) else ph + shift)
        shift += rd.pairing(k, factor.weight(rd))
    phi_out.reverse()
    return tuple(eps_out), tuple(phi_out)


def tensor(*factors: CrystalElement) -> TensorElement:
    return TensorElement(tuple(factors))


def flatten(x: CrystalElement) -> tuple[CrystalElement, ...]:
    """The canonical re-bracketing bijection: nested tensors to a flat factor list."""
    if isinstance(x, TensorElement):
        out: tuple[CrystalElement, ...] = ()
        for factor in x.factors:
            out += flatten(factor)
        return out
    return (x,)


# Literal two-factor rule, kept as an independent oracle for the n-fold form.

def binary_eps(rd: RootDatum, x: TensorElement, k: int):
    b1, b2 = x.factors
    w1 = rd.pairing(k, b1.weight(rd))
    e2 = b2.eps(rd, k)
    return ext_max([b1.eps(rd, k), NEG_INF if is_neg_inf(e2) else e2 - w1])


def binary_phi(rd: RootDatum, x: TensorElement, k: int):
    b1, b2 = x.factors
    w2 = rd.pairing(k, b2.weight(rd))
    p1 = b1.phi(rd, k)
    return ext_max([b2.phi(rd, k), NEG_INF if is_neg_inf(p1) else p1 + w2])


def binary_e(rd: RootDatum, x: TensorElement, k: int):
    b1, b2 = x.factors
    if b1.phi(rd, k) >= b2.eps(rd, k):
        moved = b1.e(rd, k)
        return None if moved is None else TensorElement((moved, b2))
    moved = b2.e(rd, k)
    return None if moved is None else TensorElement((b1, moved))


def binary_f(rd: RootDatum, x: TensorElement, k: int):
    b1, b2 = x.factors
    if b1.phi(rd, k) > b2.eps(rd, k):
        moved = b1.f(rd, k)
        return None if moved is None else TensorElement((moved, b2))
    moved = b2.f(rd, k)
    return None if moved is None else TensorElement((b1, moved))

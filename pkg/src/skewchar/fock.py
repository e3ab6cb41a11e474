"""Straightening of mode monomials in the generalized Clifford algebra.

A ket word ``modes = (m_1, ..., m_l)`` stands for ``U_{-m_1} ... U_{-m_l}|0>``;
a bra word stands for ``<0|U*_{-m_l} ... U*_{-m_1}`` (so ``modes`` lists the
bra factors from the inside out, matching the labels of ``<lam|``).

Both swap rules act on the shifted values ``c_i = m_i - i`` by plain
transposition with a sign.  Kets die when two ``c_i`` coincide or when the
sorted label goes negative (``U_n|0> = 0`` for ``n > 0``).  Bras carry the
extra vacuum reflection ``<0|U*_n = -<0|U*_{1-n}``, which on
``d_i = c_i + l + 1/2`` is ``d -> -d``; bras die only when two ``|d_i|``
coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import as_ints, conjugate_parts

KET = "ket"
BRA = "bra"


@dataclass(frozen=True)
class ModeMonomial:
    side: str
    modes: tuple

    def __post_init__(self):
        if self.side not in (KET, BRA):
            raise ValueError(f"side must be 'ket' or 'bra', got {self.side!r}")
        object.__setattr__(self, "modes", tuple(int(m) for m in self.modes))


@dataclass(frozen=True)
class FockElement:
    """``sign * |label>`` (or bra), or zero when ``sign == 0``."""

    sign: int
    label: tuple | None
    side: str

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_json(self) -> dict:
        if self.is_zero:
            return {"zero": True, "sign": 0, "label": None}
        return {"sign": self.sign, "label": list(self.label)}


def zero(side: str) -> FockElement:
    return FockElement(0, None, side)


def ket(lam: Sequence[int]) -> ModeMonomial:
    return ModeMonomial(KET, tuple(lam))


def bra(lam: Sequence[int]) -> ModeMonomial:
    return ModeMonomial(BRA, tuple(lam))


def _sort_sign(values: list) -> tuple[int, list]:
    """Sign of the permutation sorting distinct ``values`` descending, and the sorted list."""
    vals = list(values)
    sign = 1
    # insertion sort counts inversions exactly
    for i in range(1, len(vals)):
        j = i
        while j > 0 and vals[j - 1] < vals[j]:
            vals[j - 1], vals[j] = vals[j], vals[j - 1]
            sign = -sign
            j -= 1
    return sign, vals


def straighten(m: ModeMonomial) -> FockElement:
    """Normal form of a mode monomial: ``+-<label|`` / ``+-|label>`` or zero."""
    l = len(m.modes)
    if m.side == KET:
        c = [x - i for i, x in enumerate(m.modes, 1)]
        if len(set(c)) != l:
            return zero(KET)
        sign, s = _sort_sign(c)
        label = tuple(v + j for j, v in enumerate(s, 1))
        if label and label[-1] < 0:
            return zero(KET)
        return FockElement(sign, label, KET)
    # doubled half-integers d_i = 2(m_i - i) + 2l + 1 are odd, never zero
    d = [2 * (x - i) + 2 * l + 1 for i, x in enumerate(m.modes, 1)]
    sign = -1 if sum(1 for v in d if v < 0) % 2 else 1
    a = [abs(v) for v in d]
    if len(set(a)) != l:
        return zero(BRA)
    s_sign, s = _sort_sign(a)
    label = tuple((v - 2 * l - 1) // 2 + j for j, v in enumerate(s, 1))
    return FockElement(sign * s_sign, label, BRA)


def straighten_rewrite(m: ModeMonomial, max_steps: int | None = None) -> FockElement:
    """Secondary engine: apply the local rewrite rules one step at a time.

    Swaps adjacent factors with ``U_iU_j = -U_{j+1}U_{i-1}`` (and the bra
    analogue) until the word is canonical; a bra whose vacuum-adjacent factor
    has a positive subscript is folded with ``<0|U*_n = -<0|U*_{1-n}``.
    Raises RuntimeError if the step budget is exhausted.
    """
    modes = list(m.modes)
    l = len(modes)
    if max_steps is None:
        max_steps = 4 * (l + 1) ** 3 + 16
    sign = 1
    for _ in range(max_steps):
        if m.side == BRA and l and modes[-1] < 0:
            modes[-1] = -modes[-1] - 1
            sign = -sign
            continue
        if m.side == KET and l and modes[-1] < 0:
            return zero(KET)
        for k in range(l - 1):
            a, b = modes[k], modes[k + 1]
            # c_k = a - k, c_{k+1} = b - k - 1
            if b == a + 1:
                return zero(m.side)
            if b > a + 1:
                modes[k], modes[k + 1] = b - 1, a + 1
                sign = -sign
                break
        else:
            return FockElement(sign, tuple(modes), m.side)
    raise RuntimeError(f"straightening did not terminate within {max_steps} steps")


def pair(bra_el: FockElement, ket_el: FockElement) -> int:
    """``<mu|lam>`` for canonical elements of the same declared length."""
    if bra_el.side != BRA or ket_el.side != KET:
        raise ValueError("pair expects (bra, ket)")
    if bra_el.is_zero or ket_el.is_zero:
        return 0
    if len(bra_el.label) != len(ket_el.label):
        raise ValueError(
            f"dual elements are length-specific: bra length {len(bra_el.label)} "
            f"vs ket length {len(ket_el.label)}"
        )
    return bra_el.sign * ket_el.sign if bra_el.label == ket_el.label else 0


def vacuum_expectation(bra_modes: Sequence[int], ket_modes: Sequence[int]) -> int:
    """``<0|U*_{-a_l}...U*_{-a_1} U_{-b_1}...U_{-b_k}|0>`` for equal word lengths.

    Computed from the mixed relation ``U*_a U_b = delta_{ab} - U_{b-1} U*_{a-1}``
    and ``U*_a|0> = 0`` for ``a < 0``, moving the innermost U* rightwards.
    Every U* that survives past all U factors is annihilated, so for equal
    lengths the expansion ends in fully matched terms.
    """
    if len(bra_modes) != len(ket_modes):
        raise ValueError("vacuum_expectation needs bra and ket words of equal length")
    # subscripts as written left to right
    stars = [-a for a in reversed(tuple(bra_modes))]
    us = [-b for b in ket_modes]
    return _expect(tuple(stars), tuple(us))


def _expect(stars: tuple, us: tuple) -> int:
    if not stars:
        if us:
            raise ValueError("unmatched U factors; word outside the supported pattern")
        return 1
    a = stars[-1]
    rest = stars[:-1]
    total = 0
    sign = 1
    passed = []
    # U*_a moves right through us[0], us[1], ...
    for idx, b in enumerate(us):
        if a == b:
            total += sign * _expect(rest, tuple(passed) + us[idx + 1:])
        passed.append(b - 1)
        a -= 1
        sign = -sign
    if a >= 0:
        raise ValueError("unresolved U* at the vacuum; word outside the supported pattern")
    return total


def pair_words(mu: Sequence[int], lam: Sequence[int]) -> int:
    """``<mu^so|lam^so>`` via :func:`vacuum_expectation` (lengths must agree)."""
    mu, lam = as_ints(mu), as_ints(lam)
    if len(mu) != len(lam):
        raise ValueError("dual elements are length-specific")
    return vacuum_expectation(mu, lam)


def dual_conjugate_pair(mu: Sequence[int], lam: Sequence[int]) -> int:
    """``<mu^so| U*_{lam_1} ... U*_{lam_k} |0>`` by straightening the combined bra word."""
    mu, lam = as_ints(mu), as_ints(lam)
    k = len(lam)
    # as a bra word listed inside-out: m_j = -lam_{k+1-j}, then m_{k+i} = mu_i
    modes = tuple(-lam[k - j] for j in range(1, k + 1)) + mu
    el = straighten(ModeMonomial(BRA, modes))
    if el.is_zero or any(el.label):
        return 0
    return el.sign


def dual_conjugate_closed_form(mu: Sequence[int], lam: Sequence[int]) -> int:
    """Oracle ``(-1)^{|mu|} delta_{lam', mu}`` with ``lam'`` padded to ``len(mu)``."""
    mu, lam = as_ints(mu), as_ints(lam)
    conj = conjugate_parts(lam)
    if len(conj) > len(mu):
        return 0
    conj = conj + (0,) * (len(mu) - len(conj))
    return (-1) ** sum(mu) if conj == mu else 0

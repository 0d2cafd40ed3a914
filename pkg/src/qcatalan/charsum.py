"""Dirichlet characters of odd modulus and the character-sum identity

    ( sum_{j=0}^{2N-2} j chi(6j+1) ) ( sum_{k=1}^{2N-2} eps^{(2N-1)k} chi(k) )
  = -( sum_{j=0}^{2N-2} j chi(6j+2) ) ( sum_{k=1-N}^{N-1} eps^{2(2N-1)k+2} chi(k) )

for every non-principal character of period m = 2N-1 coprime to 3, with
eps a primitive cube root of unity.  All four sums live in Q(zeta_L),
L = lcm(3, order of chi), and the identity is a single-field zero test.

Only odd moduli are supported; the identity needs m = 2N-1 and the
even-modulus machinery would be dead weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Optional

from .congruence import VerificationReport, run_check
from .cyclotomic import CycloElem, euler_phi, factorize

# ---------------------------------------------------------------------------
# multiplicative structure of (Z/m)* for odd m, via CRT over prime powers


def primitive_root(p: int, a: int) -> int:
    """Smallest primitive root modulo p^a (p an odd prime)."""
    pk = p**a
    order = euler_phi(pk)
    prime_divs = [f for f, _ in factorize(order)]
    for g in range(2, pk):
        if g % p == 0:
            continue
        if all(pow(g, order // f, pk) != 1 for f in prime_divs):
            return g
    raise ArithmeticError(f"no primitive root found modulo {pk}")


@dataclass(frozen=True)
class _GroupData:
    """CRT decomposition of (Z/m)* into cyclic factors with fixed generators."""

    m: int
    prime_powers: tuple[int, ...]  # p^a per factor
    generators: tuple[int, ...]  # one generator per factor
    orders: tuple[int, ...]  # phi(p^a) per factor
    exponent: int  # lcm of the orders
    dlogs: tuple[dict[int, int], ...]  # residue -> discrete log, per factor


_GROUPS: dict[int, _GroupData] = {}


def _group_data(m: int) -> _GroupData:
    if m in _GROUPS:
        return _GROUPS[m]
    if m < 3 or m % 2 == 0:
        raise ValueError("modulus must be an odd integer >= 3")
    pps, gens, orders, dlogs = [], [], [], []
    for p, a in factorize(m):
        pk = p**a
        g = primitive_root(p, a)
        order = euler_phi(pk)
        table: dict[int, int] = {}
        x = 1
        for i in range(order):
            table[x] = i
            x = x * g % pk
        pps.append(pk)
        gens.append(g)
        orders.append(order)
        dlogs.append(table)
    data = _GroupData(
        m,
        tuple(pps),
        tuple(gens),
        tuple(orders),
        lcm(*orders) if orders else 1,
        tuple(dlogs),
    )
    _GROUPS[m] = data
    return data


@dataclass(frozen=True)
class DirichletChar:
    """A Dirichlet character mod an odd m, encoded by one exponent per
    cyclic CRT factor: chi(g_i) = zeta_{s_i}^{exponents[i]}.

    Values are roots of unity of order `order`; chi vanishes on non-units.
    """

    modulus: int
    exponents: tuple[int, ...]

    @property
    def order(self) -> int:
        data = _group_data(self.modulus)
        e = 1
        for s, t in zip(data.orders, self.exponents):
            e = lcm(e, s // gcd(s, t))
        return e

    def is_principal(self) -> bool:
        return all(t == 0 for t in self.exponents)

    def value_exponent(self, a: int) -> Optional[int]:
        """t with chi(a) = zeta_e^t (e = self.order), or None when
        gcd(a, m) > 1 so that chi(a) = 0."""
        data = _group_data(self.modulus)
        a %= self.modulus
        if gcd(a, self.modulus) != 1:
            return None
        e = self.order
        acc = 0
        for pk, s, t, table in zip(
            data.prime_powers, data.orders, self.exponents, data.dlogs
        ):
            d = table[a % pk]
            # chi_i(a) = zeta_{s}^{d t}; rescale to order e
            acc = (acc + d * t * (data.exponent // s)) % data.exponent
        assert acc * e % data.exponent == 0
        return acc * e // data.exponent % e

    def conductor(self) -> int:
        """The smallest period of the character (product of local conductors)."""
        data = _group_data(self.modulus)
        f = 1
        for (p, _), s, t in zip(
            factorize(self.modulus), data.orders, self.exponents
        ):
            comp_order = s // gcd(s, t)
            if comp_order == 1:
                continue
            v = 0
            while comp_order % p == 0:
                comp_order //= p
                v += 1
            f *= p ** (1 + v)
        return f

    def __mul__(self, other: "DirichletChar") -> "DirichletChar":
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        data = _group_data(self.modulus)
        exps = tuple(
            (a + b) % s for a, b, s in zip(self.exponents, other.exponents, data.orders)
        )
        return DirichletChar(self.modulus, exps)


def character_group(m: int) -> list[DirichletChar]:
    """All phi(m) Dirichlet characters mod odd m >= 3, principal first.

    Enumeration order is deterministic: exponent vectors in mixed-radix
    order over the cyclic factor orders.
    """
    data = _group_data(m)
    chars: list[DirichletChar] = []
    total = 1
    for s in data.orders:
        total *= s
    for idx in range(total):
        exps = []
        rest = idx
        for s in data.orders:
            exps.append(rest % s)
            rest //= s
        chars.append(DirichletChar(m, tuple(exps)))
    assert len(chars) == euler_phi(m)
    return chars


def char_value(chi: DirichletChar, a: int, L: int) -> CycloElem:
    """chi(a) as an element of Q(zeta_L); requires order(chi) | L."""
    e = chi.order
    if L % e != 0:
        raise ValueError(f"character order {e} does not divide {L}")
    t = chi.value_exponent(a)
    if t is None:
        return CycloElem.zero(L)
    return CycloElem.root_power(L, (L // e) * t)


# ---------------------------------------------------------------------------
# the four sums and the identity


@dataclass(frozen=True)
class CharSums:
    """The four exact sums entering the identity, elements of Q(zeta_L)."""

    s1: CycloElem
    s2: CycloElem
    t1: CycloElem
    t2: CycloElem


def _accumulate(L: int, terms: list[tuple[int, int]]) -> CycloElem:
    """sum of c * zeta_L^e over (e, c) pairs, reduced mod Phi_L once."""
    from .cyclotomic import _phi_int_coeffs, _reduce_int_vec

    vec = [0] * L
    for e, c in terms:
        vec[e % L] += c
    _reduce_int_vec(vec, _phi_int_coeffs(L))
    return CycloElem(L, vec)


def compute_char_sums(N: int, chi: DirichletChar) -> CharSums:
    """The weighted sums S1, S2 (j-weighted over chi(6j+1), chi(6j+2)) and
    the eps-twisted sums T1, T2, all in Q(zeta_L) with L = lcm(3, order)."""
    m = 2 * N - 1
    if N < 2:
        raise ValueError("need N >= 2")
    if m % 3 == 0:
        raise ValueError("2N-1 must not be divisible by 3")
    if chi.modulus != m:
        raise ValueError("character modulus must equal 2N-1")
    e = chi.order
    L = lcm(3, e)
    scale = L // e
    eps = L // 3  # eps = zeta_L^(L/3)

    def chi_exp(a: int) -> Optional[int]:
        t = chi.value_exponent(a)
        return None if t is None else scale * t

    s1_terms, s2_terms, t1_terms, t2_terms = [], [], [], []
    for j in range(2 * N - 1):
        t = chi_exp(6 * j + 1)
        if t is not None:
            s1_terms.append((t, j))
        t = chi_exp(6 * j + 2)
        if t is not None:
            s2_terms.append((t, j))
    for k in range(1, 2 * N - 1):
        t = chi_exp(k)
        if t is not None:
            t1_terms.append((t + eps * ((2 * N - 1) * k), 1))
    for k in range(1 - N, N):
        t = chi_exp(k)  # chi(0) = 0 drops the k = 0 term
        if t is not None:
            t2_terms.append((t + eps * (2 * (2 * N - 1) * k + 2), 1))
    return CharSums(
        _accumulate(L, s1_terms),
        _accumulate(L, s2_terms),
        _accumulate(L, t1_terms),
        _accumulate(L, t2_terms),
    )


def verify_taoconj(
    N: int, chi: DirichletChar, mode: str = "exact", tol: float = 1e-9
) -> VerificationReport:
    """S1 * T1 + S2 * T2 = 0 in Q(zeta_L) for non-principal chi mod 2N-1.

    Exact mode performs the zero test in the field; float mode embeds via
    zeta_L -> exp(2 pi i / L) and compares against `tol`.
    """
    if chi.is_principal():
        raise ValueError("the identity excludes the principal character")
    if mode not in ("exact", "float"):
        raise ValueError("mode must be 'exact' or 'float'")
    chars = character_group(2 * N - 1)
    params = {"N": N, "m": 2 * N - 1, "chi": chars.index(chi)}

    def witness() -> Optional[str]:
        sums = compute_char_sums(N, chi)
        combo = sums.s1 * sums.t1 + sums.s2 * sums.t2
        if mode == "exact":
            return None if combo.is_zero() else combo.render()
        mag = abs(combo.to_complex())
        return None if mag < tol else f"|S1*T1 + S2*T2| = {mag:.3e} >= {tol:.1e}"

    return run_check("taoconj", params, witness)

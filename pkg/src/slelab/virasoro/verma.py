"""Level-truncated Verma modules with exact mode arithmetic.

A Verma module V(c, h) is spanned, at each level k, by the PBW vectors
L_{-l1} L_{-l2} ... |h> indexed by partitions (l1 >= l2 >= ...) of k.  The
action of a single mode L_n is normal-ordered by repeated use of

    [L_n, L_m] = (n - m) L_{n+m} + (c/12)(n^3 - n) delta_{n+m,0}

and cached per module, so identities at the levels used here (<= 8 or so)
cost next to nothing.  Scalars are exact: Fractions, or sympy expressions
when c and h carry a formal parameter.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from ..errors import TruncationOverflow
from . import scalars
from .weights import central_charge, h_12

Partition = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n as weakly decreasing tuples, lexicographic order."""
    if n == 0:
        return ((),)
    out: List[Partition] = []

    def rec(remaining: int, cap: int, acc: Tuple[int, ...]):
        if remaining == 0:
            out.append(acc)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, acc + (part,))

    rec(n, n, ())
    return tuple(out)


class VermaModule:
    def __init__(self, c, h, max_level: int):
        self.c = scalars.as_exact(c)
        self.h = scalars.as_exact(h)
        self.max_level = max_level
        self.basis: List[Partition] = []
        self.index: Dict[Partition, int] = {}
        for level in range(max_level + 1):
            for lam in partitions(level):
                self.index[lam] = len(self.basis)
                self.basis.append(lam)
        self._act_cache: Dict[Tuple[int, Partition], Dict[Partition, object]] = {}

    @classmethod
    def for_kappa(cls, kappa, max_level: int) -> "VermaModule":
        """The module V(c_kappa, h_{1;2}) housing the SLE tip state."""
        kappa = scalars.as_exact(kappa)
        return cls(central_charge(kappa), h_12(kappa), max_level)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def level(self, lam: Partition) -> int:
        return sum(lam)

    # -- single-mode action on PBW basis vectors -----------------------
    def act(self, n: int, lam: Partition) -> Dict[Partition, object]:
        """Exact expansion of L_n L_{-lam}|h> in the PBW basis (untruncated)."""
        key = (n, lam)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        if not lam:
            if n > 0:
                out: Dict[Partition, object] = {}
            elif n == 0:
                out = {(): self.h}
            else:
                out = {(-n,): Fraction(1)}
        elif n == 0:
            out = {lam: self.h + self.level(lam)}
        else:
            m = -lam[0]
            rest = lam[1:]
            out = {}
            # commutator term (n - m) L_{n+m} acting on the tail
            _accumulate(out, self.act(n + m, rest), n - m)
            if n + m == 0:
                central = self.c * Fraction(n**3 - n, 12)
                _accumulate(out, {rest: Fraction(1)}, central)
            # then L_m times the normal-ordered action on the tail
            for mu, coeff in self.act(n, rest).items():
                _accumulate(out, self._prepend(m, mu), coeff)
        out = {mu: c for mu, c in out.items() if not scalars.iszero(c)}
        self._act_cache[key] = out
        return out

    def _prepend(self, m: int, mu: Partition) -> Dict[Partition, object]:
        """Normal-ordered L_m L_{-mu}|h> for a lowering mode m < 0."""
        if not mu or -m >= mu[0]:
            return {(-m,) + mu: Fraction(1)}
        return self.act(m, mu)

    # -- matrices -------------------------------------------------------
    def mode_matrix(self, n: int) -> Dict[Tuple[int, int], object]:
        """Sparse matrix {(row, col): coeff} of L_n on the truncated basis.

        Components above max_level are dropped, so for n < 0 this is the
        compression of L_n to the truncation (fine for the raising and
        diagonal modes the graded expansions use).
        """
        out: Dict[Tuple[int, int], object] = {}
        for col, lam in enumerate(self.basis):
            for mu, coeff in self.act(n, lam).items():
                row = self.index.get(mu)
                if row is not None:
                    out[(row, col)] = coeff
        return out


def _accumulate(target: Dict[Partition, object], source: Dict[Partition, object], factor):
    if scalars.iszero(factor):
        return
    for mu, c in source.items():
        s = target.get(mu, Fraction(0)) + factor * c
        target[mu] = s


class VermaVector:
    """An exact element of a truncated Verma module."""

    __slots__ = ("module", "comps")

    def __init__(self, module: VermaModule, comps: Dict[Partition, object] | None = None):
        self.module = module
        self.comps = {}
        if comps:
            for lam, c in comps.items():
                if not scalars.iszero(c):
                    if module.level(lam) > module.max_level:
                        raise TruncationOverflow(
                            f"level {module.level(lam)} exceeds truncation {module.max_level}"
                        )
                    self.comps[lam] = c

    @classmethod
    def highest_weight(cls, module: VermaModule) -> "VermaVector":
        return cls(module, {(): Fraction(1)})

    @classmethod
    def basis_vector(cls, module: VermaModule, lam: Partition) -> "VermaVector":
        return cls(module, {tuple(lam): Fraction(1)})

    def apply_mode(self, n: int) -> "VermaVector":
        """L_n applied to this vector; raises if the result leaves the truncation."""
        if n < 0:
            top = max((self.module.level(lam) for lam in self.comps), default=0)
            if top - n > self.module.max_level:
                raise TruncationOverflow(
                    f"L_{n} would reach level {top - n} > {self.module.max_level}"
                )
        out: Dict[Partition, object] = {}
        for lam, c in self.comps.items():
            _accumulate(out, self.module.act(n, lam), c)
        return VermaVector(self.module, out)

    def apply_word(self, word: Iterable[int]) -> "VermaVector":
        """Apply modes right-to-left: apply_word([a, b]) gives L_a L_b v."""
        v = self
        for n in reversed(list(word)):
            v = v.apply_mode(n)
        return v

    def __add__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.comps)
        for lam, c in other.comps.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return VermaVector(self.module, out)

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + other.scale(-1)

    def scale(self, factor) -> "VermaVector":
        return VermaVector(self.module, {lam: factor * c for lam, c in self.comps.items()})

    def is_zero(self) -> bool:
        return all(scalars.iszero(c) for c in self.comps.values())

    def coefficient(self, lam: Partition):
        return self.comps.get(tuple(lam), Fraction(0))

    def pairing(self, other: "VermaVector"):
        """Shapovalov form <self, other> with <h|h> = 1 and L_n^+ = L_{-n}."""
        total = Fraction(0)
        for lam, c in self.comps.items():
            v = other
            for part in lam:  # adjoint of L_{-l1}...L_{-lk} applied left to right
                v = v.apply_mode(part)
            total = total + c * v.coefficient(())
        return scalars.simplify(total) if scalars.is_symbolic(total) else total

    def simplify(self) -> "VermaVector":
        return VermaVector(
            self.module, {lam: scalars.simplify(c) for lam, c in self.comps.items()}
        )

    def __repr__(self) -> str:
        if not self.comps:
            return "0"
        bits = []
        for lam in sorted(self.comps, key=lambda p: (sum(p), p)):
            ops = "".join(f"L_{-p}" for p in lam)
            bits.append(f"({self.comps[lam]}){ops}|h>")
        return " + ".join(bits)


def gram_matrix(module: VermaModule, level: int) -> List[List[object]]:
    basis = partitions(level)
    vecs = [VermaVector.basis_vector(module, lam) for lam in basis]
    return [[u.pairing(v) for v in vecs] for u in vecs]


def det2(m: List[List[object]]):
    return scalars.simplify(m[0][0] * m[1][1] - m[0][1] * m[1][0])


def null_vector_level2(kappa, max_level: int = 4):
    """The level-2 singular vector (-2 L_{-2} + (kappa/2) L_{-1}^2)|omega>.

    Returns the vector together with a verification report: the exact
    residuals of L_1 and L_2 on it, and the level-2 Gram matrix whose
    determinant vanishes at h = h_{1;2}(kappa).
    """
    kappa = scalars.as_exact(kappa)
    if scalars.iszero(kappa):
        raise ValueError("kappa must be nonzero")
    module = VermaModule.for_kappa(kappa, max_level)
    omega = VermaVector.highest_weight(module)
    half = kappa / 2 if scalars.is_symbolic(kappa) else Fraction(kappa, 2)
    vec = omega.apply_mode(-2).scale(-2) + omega.apply_word([-1, -1]).scale(half)
    r1 = vec.apply_mode(1).simplify()
    r2 = vec.apply_mode(2).simplify()
    gram = gram_matrix(module, 2)
    report = {
        "kappa": str(kappa),
        "c": str(scalars.simplify(module.c)),
        "h": str(scalars.simplify(module.h)),
        "l1_residual_zero": r1.is_zero(),
        "l2_residual_zero": r2.is_zero(),
        "gram_level2": [[str(scalars.simplify(x)) for x in row] for row in gram],
        "gram_det": str(det2(gram)),
        "gram_det_zero": scalars.iszero(det2(gram)),
        "passed": r1.is_zero() and r2.is_zero() and scalars.iszero(det2(gram)),
    }
    return vec, report


def drift_vector(kappa, max_level: int = 4) -> VermaVector:
    """(-2 L_{-2} + (kappa/2) L_{-1}^2)|omega> in V(c_kappa, h_{1;2})."""
    return null_vector_level2(kappa, max_level)[0]


def sle_generator_check(kappa, max_level: int = 4) -> dict:
    """Check that the Ito drift of G_t|omega> vanishes in the irreducible module.

    The stochastic equation for G_t has drift operator
    -2 L_{-2} + (kappa/2) L_{-1}^2.  Applied to |omega> in the module with
    c = c_kappa and h = h_{1;2} it gives a singular vector: annihilated by
    every raising mode and of zero norm, hence zero in the irreducible
    quotient and invisible to every dual state <v|.  That is exactly why
    dG_t|omega> = G_t L_{-1}|omega> d(xi) has no dt term.
    """
    vec, nv_report = null_vector_level2(kappa, max_level)
    norm = vec.pairing(vec)
    decouples = nv_report["l1_residual_zero"] and nv_report["l2_residual_zero"]
    return {
        "kappa": str(scalars.as_exact(kappa)),
        "drift_is_singular_vector": decouples,
        "drift_norm": str(norm),
        "drift_norm_zero": scalars.iszero(norm),
        "null_vector": nv_report,
        "passed": decouples and scalars.iszero(norm) and nv_report["passed"],
    }

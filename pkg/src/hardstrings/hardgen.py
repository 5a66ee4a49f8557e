"""Block-structured hard instances for dictionary look-up with k mismatches.

A length-``d`` binary string is cut into ``k`` blocks of length ``b = d/k``.

* query strings ``Q``: ``k/2`` blocks carry one set bit, ``k/2`` carry two;
* base strings: every block carries exactly one set bit;
* the dictionary: base strings kept independently with probability
  ``p_alpha``, after which every pair at distance ``<= prune_radius`` is
  removed (both members).

Strings are ``BlockString`` values backed by an int bitmask whose most
significant bit is position 1. All counting is exact (``int`` / ``Fraction``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from hardstrings.errors import ParamError, ShapeError, TooLarge
from hardstrings.strings import SymbolString

BRUTE_LIMIT = 1 << 22


@dataclass(frozen=True)
class BlockParams:
    k: int
    d: int

    def __post_init__(self):
        k, d = self.k, self.d
        if k < 2 or k % 2:
            raise ParamError(f"k must be even and >= 2, got k={k}")
        if d % k:
            raise ParamError(f"k must divide d, got k={k}, d={d}")
        if d // k < 2:
            raise ParamError(f"block length d/k must be >= 2, got {d // k}")

    @property
    def b(self) -> int:
        return self.d // self.k


@dataclass(frozen=True, order=True)
class BlockString:
    value: int
    params: BlockParams = field(compare=False)

    @classmethod
    def from_bits(cls, bits: str, params: BlockParams) -> "BlockString":
        if len(bits) != params.d or any(c not in "01" for c in bits):
            raise ParamError(f"expected {params.d} binary digits, got {bits!r}")
        return cls(int(bits, 2), params)

    @classmethod
    def from_positions(cls, positions, params: BlockParams) -> "BlockString":
        """Build from 0-based set-bit positions (0 is the leftmost bit)."""
        value = 0
        for p in positions:
            value |= 1 << (params.d - 1 - p)
        return cls(value, params)

    @property
    def bits(self) -> str:
        return format(self.value, f"0{self.params.d}b")

    def __str__(self) -> str:
        return self.bits

    def popcount(self) -> int:
        return self.value.bit_count()

    def hamming(self, other: "BlockString") -> int:
        return (self.value ^ other.value).bit_count()

    def __xor__(self, other: "BlockString") -> "BlockString":
        return BlockString(self.value ^ other.value, self.params)

    def block_counts(self) -> list[int]:
        b = self.params.b
        mask = (1 << b) - 1
        k = self.params.k
        return [((self.value >> ((k - 1 - i) * b)) & mask).bit_count() for i in range(k)]

    def is_query(self) -> bool:
        counts = self.block_counts()
        return sorted(counts) == [1] * (self.params.k // 2) + [2] * (self.params.k // 2)

    def is_base(self) -> bool:
        return all(c == 1 for c in self.block_counts())

    def to_symbols(self) -> SymbolString:
        return SymbolString.from_bits(self.bits)


def _as_params(p) -> BlockParams:
    if isinstance(p, BlockParams):
        return p
    k, d = p
    return BlockParams(k, d)


# -- query set ------------------------------------------------------------

def count_queries(p: BlockParams) -> int:
    """Number of distinct strings in Q."""
    p = _as_params(p)
    k, b = p.k, p.b
    return math.comb(k, k // 2) * b ** (k // 2) * math.comb(b, 2) ** (k // 2)


def count_queries_paper(p: BlockParams) -> int:
    """``C(k, k/2) * b**k * (b-1)**(k/2)``.

    This counts generation sequences (pick the double blocks, one bit per
    block, then one extra bit per double block) and therefore overcounts the
    distinct strings by exactly ``2**(k/2)``: each double block is reached
    from either of its two bits.
    """
    p = _as_params(p)
    k, b = p.k, p.b
    return math.comb(k, k // 2) * b**k * (b - 1) ** (k // 2)


def enumerate_queries(p: BlockParams) -> list[BlockString]:
    """All of Q, sorted by bit string."""
    p = _as_params(p)
    k, b = p.k, p.b
    singles = [(i,) for i in range(b)]
    doubles = list(itertools.combinations(range(b), 2))
    out = []
    for double_blocks in itertools.combinations(range(k), k // 2):
        chosen = set(double_blocks)
        per_block = [doubles if i in chosen else singles for i in range(k)]
        for combo in itertools.product(*per_block):
            positions = [i * b + off for i, offs in enumerate(combo) for off in offs]
            out.append(BlockString.from_positions(positions, p))
    out.sort(key=lambda s: s.bits)
    return out


def enumerate_base_strings(p: BlockParams) -> list[BlockString]:
    """All ``b**k`` one-bit-per-block strings.

    The order defines the string index used by ``generate_dictionary``:
    lexicographic in the tuple of per-block offsets, which is the same as
    descending bit-string order.
    """
    p = _as_params(p)
    k, b = p.k, p.b
    return [
        BlockString.from_positions([i * b + off for i, off in enumerate(offs)], p)
        for offs in itertools.product(range(b), repeat=k)
    ]


# -- dictionary -----------------------------------------------------------

def compute_alpha(n: int, k: int, d: int) -> float:
    """``log_{d/k}(log2(n) / k)`` with base-2 logarithms."""
    if n < 2 or k < 1 or d < 1:
        raise ParamError(f"need n >= 2, k >= 1, d >= 1 (got n={n}, k={k}, d={d})")
    if d <= k:
        raise ParamError(f"log base d/k must exceed 1 (d={d}, k={k})")
    return (math.log2(math.log2(n)) - math.log2(k)) / (math.log2(d) - math.log2(k))


def default_prune_radius(n: int, k: int, d: int) -> int:
    """``max(0, floor(k * (1/4 - alpha)))``."""
    alpha = compute_alpha(n, k, d)
    return max(0, math.floor(k * (0.25 - alpha) + 1e-12))


def compute_select_prob(k: int, d: int, radius: int) -> Fraction:
    """``1 / sum_{i <= radius} C(d, i)``: one over the size of a Hamming ball."""
    if radius < 0 or radius > d or k < 1:
        raise ParamError(f"need 0 <= radius <= d (radius={radius}, d={d})")
    return Fraction(1, sum(math.comb(d, i) for i in range(radius + 1)))


@dataclass(frozen=True)
class DictionaryConfig:
    params: BlockParams
    select_prob: Fraction
    prune_radius: int
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "params", _as_params(self.params))
        prob = Fraction(self.select_prob)
        if not 0 < prob <= 1:
            raise ParamError(f"select_prob must lie in (0, 1], got {prob}")
        object.__setattr__(self, "select_prob", prob)
        if not 0 <= self.prune_radius <= self.params.d:
            raise ParamError(f"prune_radius must lie in [0, d], got {self.prune_radius}")
        if not 0 <= self.seed < 2**64:
            raise ParamError("seed must be a 64-bit unsigned integer")


def selection_draw(seed: int, index: int) -> float:
    """Uniform [0, 1) draw for base string ``index``.

    PCG64 seeded with the entropy pair ``(seed, index)``; the stream is
    fixed by numpy's SeedSequence and does not vary across platforms.
    """
    return float(np.random.default_rng([seed, index]).random())


def generate_dictionary(cfg: DictionaryConfig) -> list[BlockString]:
    base = enumerate_base_strings(cfg.params)
    if cfg.select_prob == 1:
        kept = base
    else:
        kept = [s for i, s in enumerate(base) if Fraction(selection_draw(cfg.seed, i)) < cfg.select_prob]
    if cfg.prune_radius == 0 or len(kept) < 2:
        return kept
    # base strings differ by exactly 2 per block whose set bit moved
    offsets = np.array([_block_offsets(s) for s in kept])
    doomed = np.zeros(len(kept), dtype=bool)
    for i in range(len(kept) - 1):
        dist = 2 * (offsets[i + 1:] != offsets[i]).sum(axis=1)
        close = dist <= cfg.prune_radius
        if close.any():
            doomed[i] = True
            doomed[i + 1:] |= close
    return [s for i, s in enumerate(kept) if not doomed[i]]


def _block_offsets(s: BlockString) -> list[int]:
    b, bits = s.params.b, s.bits
    return [bits.index("1", i * b) - i * b for i in range(s.params.k)]


# -- ball counts ----------------------------------------------------------

def count_within_ball_closed_form(P: BlockString, delta: int) -> int:
    """Number of base strings at Hamming distance exactly ``delta`` from ``P``.

    Splits the blocks of a base string by how they meet ``P``: single-bit
    blocks that miss (``x-``, cost 2) or hit (cost 0); double-bit blocks that
    miss both bits (``y-``, cost 3) or hit one (``y+``, cost 1). Then
    ``delta = 2 x- + 2 y- + k/2`` and each admissible ``(x-, y-)`` contributes
    ``C(k/2,x-) C(k/2,y-) (b-1)^x- (b-2)^y- 2^y+``.
    """
    if not P.is_query():
        raise ShapeError(f"{P.bits} is not a query string")
    k, b = P.params.k, P.params.b
    half = k // 2
    twice = 2 * delta - k  # equals 4 * (x- + y-)
    if twice < 0 or twice % 4:
        return 0
    misses = twice // 4
    total = 0
    for x_minus in range(0, min(half, misses) + 1):
        y_minus = misses - x_minus
        if y_minus > half:
            continue
        y_plus = half - y_minus
        total += (
            math.comb(half, x_minus)
            * math.comb(half, y_minus)
            * (b - 1) ** x_minus
            * (b - 2) ** y_minus
            * 2**y_plus
        )
    return total


def _check_feasible(p: BlockParams, size: int, limit: int) -> None:
    if size > limit:
        raise TooLarge(f"enumeration of {size} strings exceeds limit {limit} at k={p.k}, d={p.d}")


def count_within_ball_brute(P: BlockString, radius: int, limit: int = BRUTE_LIMIT) -> int:
    """``|{S base : ham(P, S) <= radius}|`` by enumeration."""
    p = P.params
    _check_feasible(p, p.b**p.k, limit)
    return sum(P.hamming(S) <= radius for S in enumerate_base_strings(p))


def intersection_count_brute(S1: BlockString, S2: BlockString, radius: int,
                             limit: int = BRUTE_LIMIT) -> int:
    """``|{P in Q : ham(P, S1) <= radius and ham(P, S2) <= radius}|``."""
    return len(intersection_members(S1, S2, radius, limit))


def intersection_members(S1: BlockString, S2: BlockString, radius: int,
                         limit: int = BRUTE_LIMIT) -> list[BlockString]:
    p = S1.params
    _check_feasible(p, count_queries(p), limit)
    return [P for P in _queries_cached(p) if P.hamming(S1) <= radius and P.hamming(S2) <= radius]


_QUERY_CACHE: dict[BlockParams, list[BlockString]] = {}


def _queries_cached(p: BlockParams) -> list[BlockString]:
    if p not in _QUERY_CACHE:
        _QUERY_CACHE[p] = enumerate_queries(p)
    return _QUERY_CACHE[p]


def xor_structure(P: BlockString, S1: BlockString, S2: BlockString) -> dict[str, int]:
    """Measured quantities about ``P xor S1`` used by the intersection bound.

    Returns the set-bit count of ``P xor S1``, how many of the set bits of
    ``S1 xor S2`` it shares / misses, and how many of its set bits are set in
    ``S1`` but not in ``P``.
    """
    ps1 = (P ^ S1).value
    s12 = (S1 ^ S2).value
    return {
        "xor_bits": ps1.bit_count(),
        "shared": (ps1 & s12).bit_count(),
        "missed": (s12 & ~ps1).bit_count(),
        "s1_not_p": (S1.value & ~P.value).bit_count(),
    }


def xor_structure_holds(P: BlockString, S1: BlockString, S2: BlockString) -> bool:
    """True iff the three predicted properties of ``P xor S1`` hold."""
    k = P.params.k
    d1, d2 = P.hamming(S1), P.hamming(S2)
    z2 = S1.hamming(S2)
    if z2 % 2 or (d1 - d2) % 2 or (2 * d1 - k) % 4:
        return False
    z = z2 // 2
    got = xor_structure(P, S1, S2)
    return (
        got["xor_bits"] == d1
        and got["shared"] == z + (d1 - d2) // 2
        and got["missed"] == z - (d1 - d2) // 2
        and 4 * got["s1_not_p"] == 2 * d1 - k
    )


def _half_int(num: Fraction) -> int | None:
    return int(num) if num.denominator == 1 else None


def _comb_or_zero(n, r) -> int:
    if n is None or r is None or n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


def intersection_upper_bound(z: int, delta1: int, delta2: int, p: BlockParams) -> Fraction:
    """Upper bound on ``|{P in Q : ham(P,S1)=delta1, ham(P,S2)=delta2}|``
    for base strings at distance ``2z``.

    Sums ``A_w B_w C_w D_w`` over ``w`` where ``A_w = C(2z, z + (delta1-delta2)/2)``,
    ``B_w = C(k, delta1/2 - k/4 - w)``, ``C_w = C(k, k/2)`` and
    ``D_w = b ** (delta2/2 + k/4 - (z - w))``. Terms with a non-integer or
    out-of-range argument, including a negative exponent in ``D_w``, count 0.
    """
    p = _as_params(p)
    if z < 0 or delta1 < 0 or delta2 < 0:
        raise ParamError("z, delta1, delta2 must be non-negative")
    k, b = p.k, p.b
    shared = _half_int(z + Fraction(delta1 - delta2, 2))
    s1_extra = Fraction(delta1, 2) - Fraction(k, 4)
    if shared is None or s1_extra.denominator != 1 or s1_extra < 0 or shared < 0:
        return Fraction(0)
    s1_extra = int(s1_extra)
    a = _comb_or_zero(2 * z, shared)
    c = math.comb(k, k // 2)
    total = Fraction(0)
    for w in range(0, min(shared, s1_extra) + 1):
        left = Fraction(delta2, 2) + Fraction(k, 4) - (z - w)
        if left.denominator != 1 or left < 0:
            continue
        total += a * _comb_or_zero(k, s1_extra - w) * c * b ** int(left)
    return total


def _need_multiple(k: int, m: int, what: str) -> None:
    if k % m:
        raise ParamError(f"{what} needs k divisible by {m}, got k={k}")


def bound_term(w: int, z: int, p: BlockParams) -> Fraction:
    """Term ``w`` of the intersection sum at ``delta1 = delta2 = k``, scaled
    by ``k**2``."""
    p = _as_params(p)
    k, b = p.k, p.b
    _need_multiple(k, 4, "the delta1=delta2=k term")
    return (
        k**2
        * math.comb(2 * z, z)
        * math.comb(k, k // 4 - w)
        * math.comb(k, k // 2)
        * Fraction(b) ** (3 * k // 4 - (z - w))
    )


def argmax_w(z: int, p: BlockParams) -> int:
    """Index of the largest term over ``0 <= w <= min(z, k/4)``; ties go to
    the smallest ``w``."""
    p = _as_params(p)
    if z < 0:
        raise ParamError("z must be non-negative")
    _need_multiple(p.k, 4, "argmax_w")
    top = min(z, p.k // 4)
    terms = [bound_term(w, z, p) for w in range(top + 1)]
    return terms.index(max(terms))


def ratio_condition(p: BlockParams) -> bool:
    """Whether consecutive terms strictly increase for every ``w < k/4``:
    ``b * (k/4 - w) / (w + 1 + 3k/4) > 1``."""
    p = _as_params(p)
    k, b = p.k, p.b
    return all(b * (k // 4 - w) > w + 1 + 3 * k // 4 for w in range(k // 4))


def z_bound(z: int, p: BlockParams) -> Fraction:
    """Largest-term bound on ``v|Q|`` at a given ``z`` (the sum's top term
    times the term count ``k/4``)."""
    p = _as_params(p)
    k = p.k
    w = min(z, k // 4)
    return Fraction(k, 4) * bound_term(w, z, p)


def argmax_z(p: BlockParams, z_min: int | None = None, z_max: int | None = None) -> int:
    """Maximiser of ``z_bound`` over ``[z_min, z_max]`` (default ``[k/16, k/2]``)."""
    p = _as_params(p)
    lo = max(1, p.k // 16) if z_min is None else z_min
    hi = p.k // 2 if z_max is None else z_max
    if lo > hi:
        raise ParamError(f"empty z range [{lo}, {hi}]")
    values = [z_bound(z, p) for z in range(lo, hi + 1)]
    return lo + values.index(max(values))


# -- reported bounds --------------------------------------------------------

@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    d: int
    alpha: float
    prune_radius: int
    p_alpha: Fraction
    query_count: int
    t_lower: Fraction | None
    v_upper_times_Q: Fraction | None
    space_ratio: Fraction | None

    def as_rows(self) -> list[tuple[str, str]]:
        def fmt(x):
            if x is None:
                return "undefined"
            if isinstance(x, Fraction):
                return f"{x} (~{float(x):.6g})"
            return str(x)

        return [(name, fmt(getattr(self, name))) for name in self.__dataclass_fields__]


def evaluate_bounds(n: int, p: BlockParams, radius: int | None = None) -> BoundsReport:
    """Evaluate the coverage lower bound ``t``, the intersection bound
    ``v|Q|``, and ``t/v = t |Q| / (v|Q|)`` exactly.

    ``t`` needs ``4 | k`` and ``v|Q|`` needs ``16 | k``; otherwise the field is
    ``None``.
    """
    p = _as_params(p)
    k, d, b = p.k, p.d, p.b
    alpha = compute_alpha(n, k, d)
    if radius is None:
        radius = max(0, math.floor(k * (0.25 - alpha) + 1e-12))
    p_alpha = compute_select_prob(k, d, radius)
    q_count = count_queries(p)
    t_lower = None
    if k % 4 == 0:
        t_lower = p_alpha * 2 ** (k // 4) * math.comb(k, k // 4) * (b - 2) ** (k // 4)
    v_upper = None
    if k % 16 == 0:
        v_upper = Fraction(
            k**2
            * (k // 4)
            * math.comb(k // 8, k // 16)
            * math.comb(k, 3 * k // 16)
            * math.comb(k, k // 2)
            * b ** (3 * k // 4)
        )
    ratio = None
    if t_lower is not None and v_upper is not None:
        ratio = t_lower * q_count / v_upper
    return BoundsReport(n, k, d, alpha, radius, p_alpha, q_count, t_lower, v_upper, ratio)


def _e_power_lower(k: int) -> Fraction:
    """Rational lower bound on ``e**k`` from the first terms of its series."""
    total = Fraction(0)
    term = Fraction(1)
    for j in range(3 * k + 20):
        total += term
        term = term * k / (j + 1)
    return total


def binom_bounds_check(n: int, k: int) -> bool:
    """``(n/k)^k <= C(n,k) <= (n e / k)^k`` with exact arithmetic.

    The upper side is certified against a rational lower bound for ``e**k``.
    """
    if not n > k > 0:
        raise ParamError(f"need n > k > 0, got n={n}, k={k}")
    c = math.comb(n, k)
    lower_ok = n**k <= c * k**k
    upper_ok = c * k**k <= n**k * _e_power_lower(k)
    return lower_ok and upper_ok

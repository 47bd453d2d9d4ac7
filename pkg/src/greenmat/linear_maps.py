"""Linear transformations of n-by-n matrices: classification and checking.

A linear map is determined by the images of the matrix units.  The
bijective ones send each unit to a nonzero multiple of a single unit,
with the cells permuted; those whose cell permutation splits into a row
permutation and a column permutation, and whose coefficient matrix has
factor rank one, are exactly the maps X -> PXQ (or X -> P X^T Q in the
transpose case) for monomial P, Q.  This module extracts that shape,
classifies it, synthesizes maps back from canonical forms, and checks
preservation/exchange of Green's relations exhaustively (boolean) or on
seeded random pairs (tropical).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from . import semiring
from .green import (
    BOUNDED_SEARCH,
    GreenRelation,
    decidable_over,
    factor_rank,
    has_factor_rank_at_most_one,
    relate,
    relate_witness,
)
from .matrix import (
    DimensionMismatch,
    Matrix,
    MonomialMatrix,
    ParseError,
    matrix_from_json,
    matrix_to_json,
    mat_add,
    scalar_mul,
    zero_matrix,
)
from .semiring import MixedSemifields, Semifield, SemifieldValue
from . import sampling
from . import _boolspace


class NotBijective(ValueError):
    """The linear map is not a bijection (not of unit-permutation shape)."""


class UnsupportedMode(ValueError):
    """The requested check mode is unavailable for this relation/semifield/size."""


@dataclass(frozen=True)
class LinearMap:
    """A linear map given by the images of all matrix units, row-major."""

    n: int
    semifield: Semifield
    images: tuple[tuple[Matrix, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch("maps act on positive sizes")
        if len(self.images) != self.n or any(len(r) != self.n for r in self.images):
            raise DimensionMismatch("need one image per matrix unit")
        for row in self.images:
            for img in row:
                if img.rows != self.n or img.cols != self.n:
                    raise DimensionMismatch("images must be n-by-n")
                if img.semifield is not self.semifield:
                    raise MixedSemifields("image over a different semifield")


@dataclass(frozen=True)
class UnitPermutationMap:
    """A bijective linear map: unit (i, j) goes to alpha[i][j] times unit sigma[i][j]."""

    n: int
    semifield: Semifield
    sigma: tuple[tuple[tuple[int, int], ...], ...]
    alpha: tuple[tuple[SemifieldValue, ...], ...]

    def __post_init__(self):
        n = self.n
        cells = {self.sigma[i][j] for i in range(n) for j in range(n)}
        if len(cells) != n * n or any(
            not (0 <= k < n and 0 <= l < n) for k, l in cells
        ):
            raise ValueError("sigma must permute the n*n cells")
        for row in self.alpha:
            for c in row:
                if c.semifield is not self.semifield:
                    raise MixedSemifields("coefficient over a different semifield")
                if semiring.is_zero(c):
                    raise ValueError("coefficients must be nonzero")


class NonCanonicalReason(enum.Enum):
    NOT_UNIT_PERMUTATION = "NotUnitPermutation"
    ROW_COLUMN_STRUCTURE_VIOLATED = "RowColumnStructureViolated"
    COEFFICIENTS_NOT_RANK_ONE = "CoefficientsNotRankOne"


@dataclass(frozen=True)
class NonCanonical:
    reason: NonCanonicalReason


@dataclass(frozen=True)
class CanonicalForm:
    """X -> PXQ when transposed is False, X -> P X^T Q when True."""

    p: MonomialMatrix
    q: MonomialMatrix
    transposed: bool


ClassifyOutcome = CanonicalForm | NonCanonical


# --- application ----------------------------------------------------------


def apply(t: LinearMap | UnitPermutationMap, x: Matrix) -> Matrix:
    if x.rows != t.n or x.cols != t.n:
        raise DimensionMismatch(f"expected a {t.n}x{t.n} argument")
    if x.semifield is not t.semifield:
        raise MixedSemifields("argument over a different semifield")
    if isinstance(t, UnitPermutationMap):
        grid = [[semiring.zero(t.semifield)] * t.n for _ in range(t.n)]
        for i in range(t.n):
            for j in range(t.n):
                k, l = t.sigma[i][j]
                grid[k][l] = semiring.mul(t.alpha[i][j], x.entries[i][j])
        return Matrix(t.semifield, t.n, t.n, tuple(tuple(r) for r in grid))
    acc = zero_matrix(t.semifield, t.n, t.n)
    for i in range(t.n):
        for j in range(t.n):
            c = x.entries[i][j]
            if not semiring.is_zero(c):
                acc = mat_add(acc, scalar_mul(c, t.images[i][j]))
    return acc


def to_linear_map(u: UnitPermutationMap) -> LinearMap:
    z = zero_matrix(u.semifield, u.n, u.n)
    images = []
    for i in range(u.n):
        row = []
        for j in range(u.n):
            k, l = u.sigma[i][j]
            grid = [list(r) for r in z.entries]
            grid[k][l] = u.alpha[i][j]
            row.append(Matrix(u.semifield, u.n, u.n, tuple(tuple(r) for r in grid)))
        images.append(tuple(row))
    return LinearMap(u.n, u.semifield, tuple(images))


def extract_unit_form(t: LinearMap) -> UnitPermutationMap:
    """Recover the unit-permutation shape of a bijective map, or fail.

    Succeeds iff every unit image is a nonzero multiple of a single
    unit and the induced cell map is injective; this is equivalent to
    bijectivity of the map.
    """
    n = t.n
    sigma = []
    alpha = []
    for i in range(n):
        srow = []
        arow = []
        for j in range(n):
            img = t.images[i][j]
            hits = [
                (k, l)
                for k in range(n)
                for l in range(n)
                if not semiring.is_zero(img.entries[k][l])
            ]
            if len(hits) != 1:
                raise NotBijective(
                    f"image of unit ({i + 1},{j + 1}) has {len(hits)} nonzero entries"
                )
            srow.append(hits[0])
            arow.append(img.entries[hits[0][0]][hits[0][1]])
        sigma.append(tuple(srow))
        alpha.append(tuple(arow))
    cells = {c for row in sigma for c in row}
    if len(cells) != n * n:
        raise NotBijective("two units map to multiples of the same unit")
    return UnitPermutationMap(n, t.semifield, tuple(sigma), tuple(alpha))


# --- classification ---------------------------------------------------------


def classify(u: UnitPermutationMap) -> ClassifyOutcome:
    """Decide whether u is X -> PXQ or X -> P X^T Q and build P, Q.

    Checks, in order: the cell permutation factors through a row and a
    column permutation (directly or after a transpose), then the
    coefficient matrix has factor rank one.  The coefficient split is
    normalized by x_1 = 1 so classify/synthesize round-trip exactly.
    """
    n = u.n
    sigma = u.sigma
    standard = all(
        sigma[i][j][0] == sigma[i][0][0] and sigma[i][j][1] == sigma[0][j][1]
        for i in range(n)
        for j in range(n)
    )
    if standard:
        rho = tuple(sigma[i][0][0] for i in range(n))
        tau = tuple(sigma[0][j][1] for j in range(n))
        transposed = False
    else:
        flipped = all(
            sigma[i][j][0] == sigma[0][j][0] and sigma[i][j][1] == sigma[i][0][1]
            for i in range(n)
            for j in range(n)
        )
        if not flipped:
            return NonCanonical(NonCanonicalReason.ROW_COLUMN_STRUCTURE_VIOLATED)
        rho = tuple(sigma[i][0][1] for i in range(n))
        tau = tuple(sigma[0][j][0] for j in range(n))
        transposed = True
    coeffs = Matrix(u.semifield, n, n, u.alpha)
    if not has_factor_rank_at_most_one(coeffs):
        return NonCanonical(NonCanonicalReason.COEFFICIENTS_NOT_RANK_ONE)
    one_v = semiring.one(u.semifield)
    inv00 = semiring.inv(u.alpha[0][0])
    xs = [one_v] + [semiring.mul(u.alpha[i][0], inv00) for i in range(1, n)]
    ys = [u.alpha[0][j] for j in range(n)]
    if not transposed:
        p = MonomialMatrix(n, rho, tuple(xs))
        qperm = [0] * n
        qscale: list[SemifieldValue] = [one_v] * n
        for j in range(n):
            qperm[tau[j]] = j
            qscale[tau[j]] = ys[j]
        q = MonomialMatrix(n, tuple(qperm), tuple(qscale))
        return CanonicalForm(p, q, False)
    p = MonomialMatrix(n, tau, tuple(ys))
    qperm = [0] * n
    qscale = [one_v] * n
    for i in range(n):
        qperm[rho[i]] = i
        qscale[rho[i]] = xs[i]
    q = MonomialMatrix(n, tuple(qperm), tuple(qscale))
    return CanonicalForm(p, q, True)


def classify_linear_map(t: LinearMap) -> ClassifyOutcome:
    try:
        u = extract_unit_form(t)
    except NotBijective:
        return NonCanonical(NonCanonicalReason.NOT_UNIT_PERMUTATION)
    return classify(u)


def synthesize(c: CanonicalForm, n: int, semifield: Semifield) -> UnitPermutationMap:
    """The unit-permutation form of X -> PXQ (or P X^T Q)."""
    if c.p.n != n or c.q.n != n:
        raise DimensionMismatch("monomial matrices do not match the requested size")
    if c.p.semifield is not semifield or c.q.semifield is not semifield:
        raise MixedSemifields("monomial matrices over a different semifield")
    qinv = [0] * n
    for col, row in enumerate(c.q.perm):
        qinv[row] = col
    sigma = []
    alpha = []
    for i in range(n):
        srow = []
        arow = []
        for j in range(n):
            if not c.transposed:
                k, l = c.p.perm[i], qinv[j]
                coeff = semiring.mul(c.p.scale[i], c.q.scale[qinv[j]])
            else:
                k, l = c.p.perm[j], qinv[i]
                coeff = semiring.mul(c.p.scale[j], c.q.scale[qinv[i]])
            srow.append((k, l))
            arow.append(coeff)
        sigma.append(tuple(srow))
        alpha.append(tuple(arow))
    return UnitPermutationMap(n, semifield, tuple(sigma), tuple(alpha))


# --- preservation and exchange checks ---------------------------------------


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class Randomized:
    seed: int
    trials: int = 1000


Mode = Exhaustive | Randomized


@dataclass(frozen=True)
class CounterexamplePair:
    a: Matrix
    b: Matrix
    image_a: Matrix
    image_b: Matrix
    detail: str
    witness: dict | None = None


@dataclass(frozen=True)
class Verdict:
    checked: str
    outcome: str  # Preserved | Exchanges | NoCounterexampleFound | Counterexample
    mode: str
    pairs_checked: int
    counterexample: CounterexamplePair | None = None
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _cell_map(u: UnitPermutationMap) -> tuple[int, ...]:
    n = u.n
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            k, l = u.sigma[i][j]
            out[i * n + j] = k * n + l
    return tuple(out)


def _exhaustive_pre(u: UnitPermutationMap, rels) -> None:
    if u.semifield is not Semifield.BOOLEAN:
        raise UnsupportedMode("exhaustive checks require the boolean semifield")
    limit = 2 if any(r in BOUNDED_SEARCH for r in rels) else 3
    if u.n > limit:
        raise UnsupportedMode(
            f"exhaustive check of {'/'.join(r.value for r in rels)} is limited to n <= {limit}"
        )


def _randomized_pre(u: UnitPermutationMap, rels) -> None:
    for r in rels:
        if not decidable_over(r, u.semifield):
            raise UnsupportedMode(
                f"{r.value} is not decidable over {u.semifield.value}; "
                "randomized checking cannot condition on it"
            )


def check_preservation(
    u: UnitPermutationMap,
    rel: GreenRelation,
    mode: Mode,
    strong: bool = False,
) -> Verdict:
    """Does u preserve rel?  Strong mode also requires preserving its negation."""
    name = f"{'strongly preserves' if strong else 'preserves'} {rel.value}"
    if isinstance(mode, Exhaustive):
        _exhaustive_pre(u, [rel])
        sp = _boolspace.space(u.n)
        table = sp.table(rel)
        act = _cell_map(u)
        tmap = [_boolspace.act_on_bits(act, m) for m in range(sp.size)]
        checked = 0
        for a in range(sp.size):
            row = table[a]
            for b in range(sp.size):
                premise = (row >> b) & 1
                conclusion = (table[tmap[a]] >> tmap[b]) & 1
                if premise or strong:
                    checked += 1
                if premise and not conclusion:
                    return _verdict_from_bits(sp, name, rel, "exhaustive", checked, a, b, u, direction="preserve")
                if strong and conclusion and not premise:
                    return _verdict_from_bits(sp, name, rel, "exhaustive", checked, a, b, u, direction="reflect")
        return Verdict(name, "Preserved", "exhaustive", checked)
    if isinstance(mode, Randomized):
        _randomized_pre(u, [rel])
        rng = random.Random(mode.seed)
        checked = 0
        for _ in range(mode.trials):
            a, b = sampling.related_pair(rng, u.semifield, u.n, rel)
            ta, tb = apply(u, a), apply(u, b)
            checked += 1
            if not relate(ta, tb, rel):
                cx = CounterexamplePair(
                    a, b, ta, tb,
                    f"a {rel.value} b holds but the images are unrelated",
                    relate_witness(a, b, rel),
                )
                return Verdict(name, "Counterexample", "randomized", checked, cx, mode.seed)
            if strong:
                pair = sampling.unrelated_pair(rng, u.semifield, u.n, rel)
                if pair is None:
                    continue
                a2, b2 = pair
                ta2, tb2 = apply(u, a2), apply(u, b2)
                checked += 1
                if relate(ta2, tb2, rel):
                    cx = CounterexamplePair(
                        a2, b2, ta2, tb2,
                        f"a {rel.value} b fails but the images are related",
                        relate_witness(ta2, tb2, rel),
                    )
                    return Verdict(name, "Counterexample", "randomized", checked, cx, mode.seed)
        return Verdict(name, "NoCounterexampleFound", "randomized", checked, None, mode.seed)
    raise UnsupportedMode(f"unknown mode {mode!r}")


def _verdict_from_bits(sp, name, rel, mode_name, checked, a, b, u, direction):
    ma, mb = sp.matrix_of(a), sp.matrix_of(b)
    ta, tb = apply(u, ma), apply(u, mb)
    if direction == "preserve":
        detail = f"a {rel.value} b holds but the images are unrelated"
        witness = relate_witness(ma, mb, rel)
    else:
        detail = f"a {rel.value} b fails but the images are related"
        witness = relate_witness(ta, tb, rel)
    return Verdict(
        name, "Counterexample", mode_name, checked,
        CounterexamplePair(ma, mb, ta, tb, detail, witness),
    )


def check_exchange(
    u: UnitPermutationMap,
    mode: Mode,
    strong: bool = False,
    pair: tuple[GreenRelation, GreenRelation] = (GreenRelation.L, GreenRelation.R),
) -> Verdict:
    """Does u exchange the two relations (a tau b implies T(a) rho T(b), both ways)?"""
    rel1, rel2 = pair
    name = (
        f"{'strongly exchanges' if strong else 'exchanges'} {rel1.value} with {rel2.value}"
    )
    if isinstance(mode, Exhaustive):
        _exhaustive_pre(u, [rel1, rel2])
        sp = _boolspace.space(u.n)
        t1, t2 = sp.table(rel1), sp.table(rel2)
        act = _cell_map(u)
        tmap = [_boolspace.act_on_bits(act, m) for m in range(sp.size)]
        checked = 0
        for a in range(sp.size):
            for b in range(sp.size):
                for fwd, bwd, rname in ((t1, t2, rel2), (t2, t1, rel1)):
                    premise = (fwd[a] >> b) & 1
                    conclusion = (bwd[tmap[a]] >> tmap[b]) & 1
                    if premise or strong:
                        checked += 1
                    if premise and not conclusion:
                        return _verdict_from_bits(
                            sp, name, rname, "exhaustive", checked, a, b, u, "preserve"
                        )
                    if strong and conclusion and not premise:
                        return _verdict_from_bits(
                            sp, name, rname, "exhaustive", checked, a, b, u, "reflect"
                        )
        return Verdict(name, "Exchanges", "exhaustive", checked)
    if isinstance(mode, Randomized):
        _randomized_pre(u, [rel1, rel2])
        rng = random.Random(mode.seed)
        checked = 0
        for _ in range(mode.trials):
            for src, dst in ((rel1, rel2), (rel2, rel1)):
                a, b = sampling.related_pair(rng, u.semifield, u.n, src)
                ta, tb = apply(u, a), apply(u, b)
                checked += 1
                if not relate(ta, tb, dst):
                    cx = CounterexamplePair(
                        a, b, ta, tb,
                        f"a {src.value} b holds but the images are not {dst.value}-related",
                        relate_witness(a, b, src),
                    )
                    return Verdict(name, "Counterexample", "randomized", checked, cx, mode.seed)
                if strong:
                    unrel = sampling.unrelated_pair(rng, u.semifield, u.n, src)
                    if unrel is None:
                        continue
                    a2, b2 = unrel
                    ta2, tb2 = apply(u, a2), apply(u, b2)
                    checked += 1
                    if relate(ta2, tb2, dst):
                        cx = CounterexamplePair(
                            a2, b2, ta2, tb2,
                            f"a {src.value} b fails but the images are {dst.value}-related",
                            relate_witness(ta2, tb2, dst),
                        )
                        return Verdict(
                            name, "Counterexample", "randomized", checked, cx, mode.seed
                        )
        return Verdict(name, "NoCounterexampleFound", "randomized", checked, None, mode.seed)
    raise UnsupportedMode(f"unknown mode {mode!r}")


# --- sticky-matrix search ----------------------------------------------------


@dataclass(frozen=True)
class ExhaustiveBoolean:
    pass


@dataclass(frozen=True)
class RandomizedTropical:
    seed: int
    trials: int = 1000
    k_samples: int = 8


@dataclass(frozen=True)
class StickyRefutation:
    m: Matrix
    failed: str  # "S2" or "S3"
    k: SemifieldValue | None
    k_is_square_root_witness: bool


@dataclass(frozen=True)
class StickyReport:
    semifield: str
    mode: str
    candidates: int
    refutations: tuple[StickyRefutation, ...]
    survivor: Matrix | None
    seed: int | None = None
    generator: str | None = None

    @property
    def outcome(self) -> str:
        return "NoCandidateFound" if self.survivor is None else "CandidateSurvived"


def _sticky_pair(m: Matrix, k: SemifieldValue) -> tuple[Matrix, Matrix]:
    (a, b), (c, d) = m.entries
    mk = semiring.mul
    sf = m.semifield
    ak = Matrix(sf, 2, 2, ((mk(a, k), b), (c, mk(d, k))))
    bk = Matrix(sf, 2, 2, ((a, mk(b, k)), (mk(c, k), d)))
    return ak, bk


def _refute_candidate(
    m: Matrix, ks: list[tuple[SemifieldValue, bool]]
) -> StickyRefutation | None:
    """First k among ks with A_k and B_k not H-related, or None if all survive."""
    for k, is_witness in ks:
        ak, bk = _sticky_pair(m, k)
        if not relate(ak, bk, GreenRelation.H):
            return StickyRefutation(m, "S3", k, is_witness)
    return None


def find_sticky(semifield: Semifield, mode) -> StickyReport:
    """Search for a 2x2 matrix with invertible entries, factor rank 2, and
    A_k H B_k at every tested invertible k.  No such matrix is expected
    to exist; the report carries one refutation per candidate.
    """
    if isinstance(mode, ExhaustiveBoolean):
        if semifield is not Semifield.BOOLEAN:
            raise UnsupportedMode("exhaustive sticky search is boolean-only")
        refutations = []
        candidates = 0
        one_v = semiring.one(semifield)
        for m in _full_support_boolean_2x2():
            candidates += 1
            if factor_rank(m).value != 2:
                refutations.append(StickyRefutation(m, "S2", None, False))
                continue
            refutation = _refute_candidate(m, [(one_v, False)])
            if refutation is None:
                return StickyReport(
                    semifield.value, "exhaustive", candidates, tuple(refutations), m
                )
            refutations.append(refutation)
        return StickyReport(
            semifield.value, "exhaustive", candidates, tuple(refutations), None
        )
    if isinstance(mode, RandomizedTropical):
        if not semifield.is_tropical:
            raise UnsupportedMode("randomized sticky search needs a tropical carrier")
        rng = random.Random(mode.seed)
        refutations = []
        candidates = 0
        while candidates < mode.trials:
            entries = [sampling.random_nonzero_scalar(rng, semifield) for _ in range(4)]
            a, b, c, d = entries
            if semiring.mul(a, d) == semiring.mul(b, c):
                continue  # factor rank 1, fails S2; only rank-2 candidates count
            candidates += 1
            m = Matrix(semifield, 2, 2, ((a, b), (c, d)))
            ratio = semiring.mul(
                semiring.mul(b, c), semiring.inv(semiring.mul(a, d))
            )
            root = semiring.try_sqrt(ratio)
            ks: list[tuple[SemifieldValue, bool]] = []
            if root is not None:
                ks.append((root, True))
            ks.extend(
                (sampling.random_nonzero_scalar(rng, semifield), False)
                for _ in range(mode.k_samples)
            )
            refutation = _refute_candidate(m, ks)
            if refutation is None:
                return StickyReport(
                    semifield.value, "randomized", candidates, tuple(refutations), m,
                    mode.seed, sampling.GENERATOR_NAME,
                )
            refutations.append(refutation)
        return StickyReport(
            semifield.value, "randomized", candidates, tuple(refutations), None,
            mode.seed, sampling.GENERATOR_NAME,
        )
    raise UnsupportedMode(f"unknown sticky search mode {mode!r}")


def _full_support_boolean_2x2():
    one_v = semiring.one(Semifield.BOOLEAN)
    yield Matrix(Semifield.BOOLEAN, 2, 2, ((one_v, one_v), (one_v, one_v)))


# --- JSON wire formats -------------------------------------------------------

_MAP_KEYS = {"n", "semifield", "images"}
_FORM_KEYS = {"p", "q", "transposed"}


def linear_map_to_json(t: LinearMap) -> dict:
    return {
        "n": t.n,
        "semifield": t.semifield.value,
        "images": [matrix_to_json(t.images[i][j]) for i in range(t.n) for j in range(t.n)],
    }


def linear_map_from_json(obj) -> LinearMap:
    if not isinstance(obj, dict) or set(obj) != _MAP_KEYS:
        raise ParseError(f"linear map object must have exactly the keys {sorted(_MAP_KEYS)}")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("n must be a positive integer")
    try:
        sf = Semifield(obj["semifield"])
    except ValueError:
        raise ParseError(f"unknown semifield {obj['semifield']!r}") from None
    raw = obj["images"]
    if not isinstance(raw, list) or len(raw) != n * n:
        raise ParseError(f"expected {n * n} images, row-major over the units")
    mats = [matrix_from_json(o) for o in raw]
    for m in mats:
        if m.rows != n or m.cols != n:
            raise ParseError("every image must be n-by-n")
        if m.semifield is not sf:
            raise ParseError("image semifield differs from the map's")
    images = tuple(tuple(mats[i * n + j] for j in range(n)) for i in range(n))
    return LinearMap(n, sf, images)


def canonical_form_to_json(c: CanonicalForm) -> dict:
    from .matrix import monomial_to_json

    return {
        "p": monomial_to_json(c.p),
        "q": monomial_to_json(c.q),
        "transposed": c.transposed,
    }


def canonical_form_from_json(semifield: Semifield, obj) -> CanonicalForm:
    from .matrix import monomial_from_json

    if not isinstance(obj, dict) or set(obj) != _FORM_KEYS:
        raise ParseError(f"canonical form object must have exactly the keys {sorted(_FORM_KEYS)}")
    if not isinstance(obj["transposed"], bool):
        raise ParseError("transposed must be a boolean")
    p = monomial_from_json(semifield, obj["p"])
    q = monomial_from_json(semifield, obj["q"])
    if p.n != q.n:
        raise ParseError("p and q must have the same size")
    return CanonicalForm(p, q, obj["transposed"])

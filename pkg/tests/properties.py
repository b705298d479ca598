"""Hypothesis properties shared by the unit suite and the acceptance run."""
import itertools

from hypothesis import given, settings, strategies as st

from weylchar.characters import GradedCharacter, MultiplicitySeries, decompose, global_weyl_character, local_weyl_character
from weylchar.oracle import Generator, NAMES, TensorVector, bracket_check, symmetrize
from weylchar.rootdata import Weight, dominance_leq, irr_character, weyl_dimension
from weylchar.series import Series, compare

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def series(draw, exact=None, max_len=5):
    coeffs = draw(st.lists(small_ints, max_size=max_len))
    lo = draw(st.integers(min_value=-2, max_value=3))
    if exact is None:
        exact = draw(st.booleans())
    trunc = None if exact else draw(st.integers(min_value=lo - 1, max_value=lo + 7))
    return Series(coeffs, lo, trunc)


def same(a: Series, b: Series) -> bool:
    """Equality for exact series, agreement on the common range otherwise."""
    if a.is_exact and b.is_exact:
        return a == b
    return compare(a, b).equal


@st.composite
def dominant_weights(draw, max_rank=2, max_coord=3):
    n = draw(st.integers(min_value=1, max_value=max_rank))
    return Weight(draw(st.lists(st.integers(0, max_coord), min_size=n, max_size=n)))


@st.composite
def weights(draw, rank, bound=4):
    return Weight(draw(st.lists(st.integers(-bound, bound), min_size=rank, max_size=rank)))


@st.composite
def tensor_vectors(draw, ell=None, max_degree=4):
    if ell is None:
        ell = draw(st.integers(min_value=1, max_value=3))
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=4))):
        eps = tuple(draw(st.sampled_from((1, -1))) for _ in range(ell))
        d = draw(st.integers(0, max_degree))
        cuts = sorted(draw(st.lists(st.integers(0, d), min_size=ell - 1, max_size=ell - 1)))
        a = tuple(y - x for x, y in zip([0] + cuts, cuts + [d]))
        terms[(eps, a)] = draw(st.integers(-3, 3))
    return TensorVector(ell, terms)


generators = st.builds(Generator, st.sampled_from(NAMES), st.integers(0, 2))


# -- series ring axioms ----------------------------------------------------------------

@given(series(), series(), series())
def prop_series_ring(a, b, c):
    assert same(a + b, b + a)
    assert same(a * b, b * a)
    assert same((a + b) + c, a + (b + c))
    assert same((a * b) * c, a * (b * c))
    assert same(a * (b + c), a * b + a * c)
    assert same(a - a, Series(trunc=a.trunc))
    assert same(a * Series([1]), a)


@given(series(exact=True), series(exact=True))
def prop_series_exact_ring(a, b):
    assert (a + b) - b == a
    assert a * b == b * a
    if a.coeffs and b.coeffs:
        assert (a * b).valuation == a.valuation + b.valuation


@given(series(exact=False), series())
def prop_truncation_is_honest(a, b):
    """Known coefficients of a product agree with the product of exact lifts."""
    p = a * b
    lift_a = Series(a.coeffs, a.min_deg)
    lift_b = Series(b.coeffs, b.min_deg)
    assert compare(p, lift_a * lift_b).equal


# -- characters ----------------------------------------------------------------------------

@st.composite
def multiplicity_data(draw):
    n = draw(st.integers(min_value=1, max_value=2))
    out = MultiplicitySeries()
    for _ in range(draw(st.integers(min_value=1, max_value=3))):
        mu = Weight(draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)))
        coeffs = draw(st.lists(st.integers(0, 3), min_size=1, max_size=3))
        s = Series(coeffs, draw(st.integers(0, 3)))
        if not s.is_zero():
            out[mu] = out[mu] + s if mu in out else s
    return n, out


@given(multiplicity_data())
@settings(max_examples=60, deadline=None)
def prop_decompose_round_trip(data):
    n, mults = data
    c = mults.character(n)
    back = decompose(c)
    assert dict(back) == dict(mults)
    assert back.character(n) == c


@given(dominant_weights(max_rank=2, max_coord=2), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def prop_lowest_degree_triangular(lam, r):
    """Removing ``ch V(lam) u^r`` leaves only degrees above ``r`` and weights below ``lam``."""
    D = r + 3
    for local, c in ((True, local_weyl_character(lam, r).truncate(D)), (False, global_weyl_character(lam, r, D))):
        rest = c - GradedCharacter.from_character(irr_character(lam), r, D)
        for w, s in rest:
            assert s.valuation > r
        for mu, s in decompose(rest).items():
            assert dominance_leq(mu, lam)
            # the top weight space of the local module is one-dimensional
            assert not (local and mu == lam)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(weights(n), weights(n), weights(n))))
def prop_dominance_partial_order(ws):
    a, b, c = ws
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


@given(dominant_weights(max_rank=3, max_coord=2))
@settings(max_examples=40, deadline=None)
def prop_weyl_symmetry(lam):
    ch = irr_character(lam)
    assert ch.dimension() == weyl_dimension(lam)
    assert ch[lam] == 1
    for w, m in ch:
        x = w.to_partition_coords()
        for perm in itertools.permutations(range(len(x))):
            y = tuple(x[i] for i in perm)
            shift = y[-1]
            v = Weight.from_partition_coords(tuple(t - shift for t in y))
            assert ch[v] == m


# -- oracle --------------------------------------------------------------------------------

@given(st.integers(1, 4).flatmap(lambda ell: tensor_vectors(ell=ell, max_degree=3)))
@settings(max_examples=50, deadline=None)
def prop_symmetrizer_idempotent(v):
    s = symmetrize(v)
    assert symmetrize(s) == s


@given(generators, generators, tensor_vectors())
@settings(max_examples=150, deadline=None)
def prop_bracket_relations(a, b, v):
    result = bracket_check(a, b, [v])
    assert result, result.witness


ALL = [
    prop_series_ring,
    prop_series_exact_ring,
    prop_truncation_is_honest,
    prop_decompose_round_trip,
    prop_lowest_degree_triangular,
    prop_dominance_partial_order,
    prop_weyl_symmetry,
    prop_symmetrizer_idempotent,
    prop_bracket_relations,
]

"""Property tests over randomized configurations, not just catalog members."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from kodaira import (
    Component,
    CurveConfiguration,
    IntrinsicType,
    LocalType,
    SingularPoint,
    build,
    classify,
    dual_graph,
    first_betti,
    gcd_multiplicity,
    intersection_matrix,
    invariant_profile,
    loop_rank,
    reduce,
)
from oracles import relabeled


@st.composite
def configurations(draw):
    """Random valid configurations: connected, arbitrary multiplicities."""
    n = draw(st.integers(1, 5))
    if n == 1:
        genus = draw(st.integers(0, 1))
        intrinsic = ()
        if genus == 0:
            intrinsic = tuple(
                draw(
                    st.lists(
                        st.sampled_from([IntrinsicType.NODE, IntrinsicType.CUSP]),
                        max_size=2,
                    )
                )
            )
        return CurveConfiguration(
            (
                Component(
                    "c0",
                    draw(st.integers(1, 3)),
                    genus,
                    draw(st.sampled_from([-4, -2, 0, 2])),
                    intrinsic,
                ),
            )
        )
    components = tuple(
        Component(
            f"c{i}",
            draw(st.integers(1, 3)),
            draw(st.integers(0, 1)),
            draw(st.sampled_from([-4, -2, 0])),
        )
        for i in range(n)
    )
    names = [c.name for c in components]
    points = []
    for i in range(1, n):  # random spanning tree keeps it connected
        j = draw(st.integers(0, i - 1))
        local = draw(st.sampled_from([LocalType.TRANSVERSE, LocalType.TACNODE]))
        points.append(SingularPoint(f"p{len(points)}", local, (names[i], names[j])))
    for _ in range(draw(st.integers(0, 3))):
        local = draw(
            st.sampled_from(
                [LocalType.TRANSVERSE, LocalType.TACNODE, LocalType.ORDINARY_TRIPLE]
            )
        )
        if local.arity > n:
            continue
        picked = draw(st.permutations(names))[: local.arity]
        points.append(SingularPoint(f"p{len(points)}", local, tuple(picked)))
    return CurveConfiguration(components, tuple(points))


@settings(max_examples=60, deadline=None)
@given(configurations())
def test_intersection_matrix_shape(config):
    m = intersection_matrix(config).entries
    for i in range(len(m)):
        for j in range(len(m)):
            assert m[i][j] == m[j][i]
            if i != j:
                assert m[i][j] >= 0


@settings(max_examples=60, deadline=None)
@given(configurations())
def test_reduce_is_idempotent_and_primitive(config):
    once = reduce(config)
    assert reduce(once) == once
    assert gcd_multiplicity(once) == 1
    assert once.points == config.points
    assert [c.name for c in once.components] == [c.name for c in config.components]


@settings(max_examples=60, deadline=None)
@given(configurations())
def test_loop_rank_ignores_multiplicities(config):
    assert loop_rank(config) == loop_rank(reduce(config))


@settings(max_examples=60, deadline=None)
@given(configurations(), st.integers(0, 2**32 - 1))
def test_classify_is_label_independent(config, seed):
    assert classify(relabeled(config, random.Random(seed))) == classify(config)


@settings(max_examples=60, deadline=None)
@given(configurations())
def test_recognized_configurations_share_the_catalog_profile(config):
    kind = classify(config)
    if kind is None:
        return
    assert invariant_profile(config) == invariant_profile(build(kind))


@settings(max_examples=60, deadline=None)
@given(configurations())
def test_transverse_only_dual_graphs_satisfy_the_point_count_formula(config):
    reduced = reduce(config)
    if any(p.local_type is not LocalType.TRANSVERSE for p in reduced.points):
        return
    if any(c.intrinsic for c in reduced.components):
        return
    betti = first_betti(dual_graph(reduced))
    assert betti == len(reduced.points) - reduced.n_components + 1

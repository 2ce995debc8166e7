import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hzcolor.coloring import (
    OperationScript,
    PartialColoring,
    Recolor,
    Shift,
    SwapChain,
    anchored_chain,
    are_linked,
    chain_through,
    execute_script,
    is_elementary,
    is_stable,
    kempe_swap,
    missing_colors,
    shift,
    swap_sequence,
)
from hzcolor.errors import (
    AmbiguousMissing,
    ImproperResult,
    MismatchedBase,
    PrecedenceViolation,
    ScriptError,
    StaleChain,
)
from hzcolor.fixtures import cycle, k5_minus_edge
from hzcolor.graph import Graph
from hzcolor.search import find_coloring
from oracles import is_proper_edge_coloring
from strategies import colorings


def path3() -> PartialColoring:
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    return PartialColoring(g, 2, {(0, 1): 1, (1, 2): 2})


def k5e_triple() -> PartialColoring:
    g = k5_minus_edge()
    # r = 2 has degree 4, s1 = 0 has degree 3
    col = find_coloring(g, 4, skip=(0, 2), rng=random.Random(3))
    return PartialColoring(g, 4, col, (0, 2))


def conserved(c: PartialColoring) -> bool:
    total = sum(len(c.missing(v)) for v in range(c.graph.n))
    return total == c.graph.n * c.k - 2 * c.colored_edge_count()


# -- missing sets -------------------------------------------------------------


def test_missing_on_isolated_vertex_is_full_palette():
    c = PartialColoring(Graph.from_edges(1, []), 3)
    assert missing_colors(c, 0) == {1, 2, 3}


def test_saturated_vertex_misses_nothing():
    c = path3()
    assert c.missing(1) == frozenset()


def test_center_of_coloring_triple_misses_one_color():
    c = k5e_triple()
    assert len(c.missing(2)) == 1
    assert len(c.missing(0)) == 2


def test_elementary_examples():
    c = path3()
    assert is_elementary(c, [0])
    assert not is_elementary(PartialColoring(Graph.from_edges(2, []), 1), [0, 1])


def test_constructor_rejects_out_of_range_color():
    with pytest.raises(ValueError):
        PartialColoring(Graph.from_edges(2, [(0, 1)]), 2, [3])


def test_check_rejects_extra_uncolored_edge():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ImproperResult):
        PartialColoring(g, 2, [1, 0], None).check()
    PartialColoring(g, 2, [1, 0], (1, 2)).check()


# -- chains ------------------------------------------------------------------


def test_equal_colors_give_single_vertex_chain():
    ch = chain_through(path3(), 1, 1, 0)
    assert ch.vertices == (0,) and not ch.edges


def test_path_chain_is_forced_alternation():
    ch = chain_through(path3(), 1, 2, 0)
    assert ch.vertices == (0, 1, 2) and ch.is_path
    assert ch.endpoints == (0, 2)
    assert ch.meets_before(0, 1, 2) and ch.meets_before(2, 1, 0)


def test_interior_vertex_chain_and_anchoring():
    c = path3()
    ch = chain_through(c, 1, 2, 1)
    assert set(ch.vertices) == {0, 1, 2}
    with pytest.raises(ValueError):
        anchored_chain(c, 1, 2, 1)
    assert anchored_chain(c, 1, 2, 2).vertices == (2, 1, 0)


def test_even_cycle_chain():
    g = cycle(4)
    c = PartialColoring(g, 2, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    ch = chain_through(c, 1, 2, 0)
    assert ch.is_cycle and ch.endpoints is None
    assert len(ch.edges) == 4


def test_linked_examples():
    c = path3()
    assert are_linked(c, 1, 2, 0, 0)
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    c2 = PartialColoring(g, 2, [1, 1])
    assert not are_linked(c2, 1, 2, 0, 3)


def test_subchain_swap_segment():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    c = PartialColoring(g, 3, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    seg = chain_through(c, 1, 2, 0).subchain(0, 1)
    assert seg.segment and seg.edges == ((0, 1),)
    out = kempe_swap(c, seg)
    assert out.color(0, 1) == 2 and not out.is_proper()


def test_stale_chain_is_rejected():
    c = path3()
    ch = chain_through(c, 1, 2, 0)
    c2 = kempe_swap(c, ch)
    with pytest.raises(StaleChain):
        kempe_swap(c2, ch)


@given(colorings(), st.data())
def test_chains_partition_bicolored_edges(c, data):
    a, b = data.draw(st.sampled_from([(a, b) for a in range(1, c.k + 1) for b in range(a + 1, c.k + 1)] or [(1, 1)]))
    assume(a != b)
    ab_edges = {e for e, col in c.as_dict().items() if col in (a, b)}
    seen: set = set()
    for v in range(c.graph.n):
        ch = chain_through(c, a, b, v)
        if ch.edge_set & seen:
            assert ch.edge_set <= seen
        seen |= ch.edge_set
        if ch.is_path and ch.edges:
            for end in ch.endpoints:
                assert {a, b} & c.missing(end)
        if {a, b} <= c.present(v):
            assert ch.is_cycle or v not in ch.endpoints
    assert seen == ab_edges


# -- Kempe changes ----------------------------------------------------------------


@given(colorings(), st.data())
def test_kempe_swap_is_involution_and_proper(c, data):
    v = data.draw(st.integers(0, c.graph.n - 1))
    a = data.draw(st.integers(1, c.k))
    b = data.draw(st.integers(1, c.k))
    ch = chain_through(c, a, b, v)
    once = kempe_swap(c, ch)
    assert once.is_proper() and conserved(once)
    assert kempe_swap(once, chain_through(once, a, b, v)) == c


def test_swap_on_single_vertex_chain_is_identity():
    c = path3()
    ch = chain_through(c, 1, 1, 0)
    assert kempe_swap(c, ch) == c


@given(colorings(), st.data())
def test_swapping_an_anchored_path_moves_the_missing_color(c, data):
    v = data.draw(st.integers(0, c.graph.n - 1))
    miss = sorted(c.missing(v))
    pres = sorted(c.present(v))
    assume(miss and pres)
    a, b = data.draw(st.sampled_from(miss)), data.draw(st.sampled_from(pres))
    ch = anchored_chain(c, a, b, v)
    out = kempe_swap(c, ch)
    assert b in out.missing(v) and a not in out.missing(v)


def test_unlinked_swap_frees_the_center_color():
    # r = 0 misses 1 via the uncolored edge; s = 3 misses 2 and sits on a (1,2)-path away from r
    g = Graph.from_edges(5, [(0, 1), (0, 3), (3, 4), (1, 2)])
    c = PartialColoring(g, 2, {(0, 1): 2, (3, 4): 1, (1, 2): 1}, (0, 3))
    assert 1 in c.missing(0) and 2 in c.missing(3)
    assert not are_linked(c, 1, 2, 0, 3)
    out = kempe_swap(c, anchored_chain(c, 2, 1, 3))
    assert 1 in out.missing(3)


def test_swap_sequence_trivial_step_is_identity():
    c = path3()
    assert swap_sequence(c, 0, [2, 2]) == c


@given(colorings(), st.data())
def test_single_swap_sequence_equals_kempe_swap(c, data):
    v = data.draw(st.integers(0, c.graph.n - 1))
    miss, pres = sorted(c.missing(v)), sorted(c.present(v))
    assume(miss and pres)
    a, b = data.draw(st.sampled_from(miss)), data.draw(st.sampled_from(pres))
    assert swap_sequence(c, v, [a, b]) == kempe_swap(c, chain_through(c, a, b, v))


@given(colorings(), st.data())
def test_double_swap_keeps_properness(c, data):
    cands = [v for v in range(c.graph.n) if c.missing(v) and len(c.present(v)) >= 2]
    assume(cands)
    v = data.draw(st.sampled_from(cands))
    miss, pres = sorted(c.missing(v)), sorted(c.present(v))
    a = data.draw(st.sampled_from(miss))
    tau, last = data.draw(st.permutations(pres))[:2]
    out = swap_sequence(c, v, [a, tau, last])
    assert out.is_proper() and conserved(out)
    assert last in out.missing(v) and tau in out.present(v)


def test_swap_sequence_precedence_errors():
    c = path3()
    with pytest.raises(PrecedenceViolation):
        swap_sequence(c, 1, [1, 2])
    wide = PartialColoring(c.graph, 3, c.colors())
    with pytest.raises(PrecedenceViolation) as exc:
        swap_sequence(wide, 0, [2, 3])
    assert exc.value.step == 1


# -- shifts -------------------------------------------------------------------


def test_empty_shift_is_identity():
    c = path3()
    assert shift(c, 1, []) == c


def star_for_shift() -> PartialColoring:
    # center 0 with leaves 1..3; each leaf also has a pendant edge so it misses exactly one color
    g = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    cols = {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 4): 3, (2, 5): 1, (3, 6): 4}
    return PartialColoring(g, 4, cols)


def test_shift_rotation_permutes_spoke_colors_cyclically():
    g = star_for_shift().graph
    c = PartialColoring(g, 3, {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 4): 3, (2, 5): 1, (3, 6): 2})
    assert [sorted(c.missing(s)) for s in (1, 2, 3)] == [[2], [3], [1]]
    out = shift(c, 0, [1, 2, 3])
    assert [out.color(0, s) for s in (1, 2, 3)] == [2, 3, 1]
    assert out.is_proper()
    # the shifted leaves form the reversed rotation, so shifting again undoes it
    assert [sorted(out.missing(s)) for s in (3, 2, 1)] == [[3], [2], [1]]
    assert shift(out, 0, [1, 2, 3]) == c
    assert shift(shift(out, 0, [1, 2, 3]), 0, [1, 2, 3]) == out


def test_shift_without_check_may_leave_a_clash():
    c = star_for_shift()
    with pytest.raises(AmbiguousMissing):
        shift(c, 0, [1])
    g = c.graph
    c = PartialColoring(g, 3, {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 4): 3, (2, 5): 1})
    # leaf 1 misses 2, which is on spoke 02: shifting only 1 collides at the center
    with pytest.raises(ImproperResult):
        shift(c, 0, [1])
    out = shift(c, 0, [1], check=False)
    assert out.color(0, 1) == 2 and not out.is_proper()


# -- stability -------------------------------------------------------------------


def test_stability_examples():
    c = k5e_triple()
    assert is_stable(c, c, range(5), c.graph.edge_list)
    e = next(e for e in c.graph.edge_list if c.color(*e))
    other = c.copy()
    other.set_color(*e, 0)
    assert not is_stable(other, c, (), [e])
    with pytest.raises(MismatchedBase):
        is_stable(PartialColoring(c.graph, 5, c.colors(), c.uncolored_edge), c)


@given(colorings(), st.data())
def test_swap_away_from_t_is_stable(c, data):
    a, b = data.draw(st.integers(1, c.k)), data.draw(st.integers(1, c.k))
    v = data.draw(st.integers(0, c.graph.n - 1))
    ch = chain_through(c, a, b, v)
    T = [w for w in range(c.graph.n) if w not in ch]
    T_edges = [e for e in c.graph.edge_list if e[0] in T and e[1] in T]
    assert is_stable(kempe_swap(c, ch), c, T, T_edges)


@given(colorings(), st.data())
def test_stability_is_an_equivalence_on_fixed_t(c, data):
    rng = random.Random(data.draw(st.integers(0, 999)))
    T = [v for v in range(c.graph.n) if rng.random() < 0.4]
    E = [e for e in c.graph.edge_list if rng.random() < 0.3]
    cols = [c]
    for _ in range(2):
        cur = cols[-1]
        a, b = rng.randint(1, c.k), rng.randint(1, c.k)
        cols.append(kempe_swap(cur, chain_through(cur, a, b, rng.randrange(c.graph.n))))
    x, y, z = cols
    assert is_stable(x, x, T, E)
    assert is_stable(x, y, T, E) == is_stable(y, x, T, E)
    if is_stable(x, y, T, E) and is_stable(y, z, T, E):
        assert is_stable(x, z, T, E)


# -- scripts ----------------------------------------------------------------------


def test_empty_script_is_identity():
    c = k5e_triple()
    out, trace = execute_script(c, OperationScript())
    assert out == c and trace == []


def test_swap_twice_script_is_identity():
    c = k5e_triple()
    a = next(iter(c.missing(2)))
    b = next(iter(c.present(2)))
    script = OperationScript([SwapChain(2, a, b), SwapChain(2, a, b)])
    out, trace = execute_script(c, script)
    assert out == c and len(trace) == 2
    assert trace[0].missing_delta[2] == ((a,), (b,))


def test_script_text_round_trip():
    text = "swap 0 1 2\nswapseg 0 3 1 2\nshift 0 1,2\nshift 4 -\nrecolor 0 1 1 2\nuncolor 0 1\ncolor 0 1 3\n"
    assert OperationScript.from_text(text).to_text() == text
    with pytest.raises(ValueError):
        OperationScript.from_text("rotate 0 1")


def test_script_errors_carry_step_index():
    c = k5e_triple()
    e = next(e for e in c.graph.edge_list if c.color(*e))
    wrong = c.color(*e) % 4 + 1
    with pytest.raises(ScriptError) as exc:
        execute_script(c, OperationScript([SwapChain(2, 1, 1), Recolor(*e, wrong, 1)]))
    assert exc.value.step == 1
    with pytest.raises(ScriptError):
        execute_script(c, OperationScript([SwapChain(99, 1, 2)]))


def test_step_check_rejects_transient_clash_that_end_check_allows():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    c = PartialColoring(g, 3, {(0, 1): 1, (1, 2): 2})
    script = OperationScript([Recolor(0, 1, 1, 2), Recolor(1, 2, 2, 1)])
    with pytest.raises(ScriptError):
        execute_script(c, script, check="step")
    out, _ = execute_script(c, script, check="end")
    assert out.color(0, 1) == 2 and out.color(1, 2) == 1


def test_script_leaving_extra_edge_uncolored_fails():
    c = path3()
    with pytest.raises(ScriptError) as exc:
        execute_script(c, OperationScript.from_text("uncolor 0 1\n"))
    assert exc.value.step == 1


@given(colorings(uncolor=False))
def test_shift_step_in_script_matches_function(c):
    for r in range(c.graph.n):
        seq = [s for s in c.graph.neighbors(r) if len(c.missing(s)) == 1]
        try:
            expect = shift(c, r, seq)
        except (ImproperResult, AmbiguousMissing):
            continue
        out, _ = execute_script(c, OperationScript([Shift(r, tuple(seq))]))
        assert out == expect
        assert is_proper_edge_coloring(c.graph.edge_list, out.colors(), c.k)

# -*- coding: utf-8 -*-

import io
import threading

import pytest
from groupiepy.graph import Graph, gen_gnp
from groupiepy.parser import (dump_edge_list, dumps_edge_list, load,
                              load_edge_list, load_fp)
from groupiepy.parser.exc import (EdgeListGrammarError, EdgeListLexerError,
                                  EdgeListParserError)


def test_path():
    graph = load('graph-cases/p3.edges')
    assert graph.n == 3
    assert graph.edge_list() == [(0, 1), (1, 2)]


def test_comments_and_blank_lines():
    graph = load('graph-cases/star4.edges')
    assert graph.n == 4
    assert graph.edge_list() == [(0, 1), (0, 2), (0, 3)]


def test_empty_graph():
    graph = load('graph-cases/empty3.edges')
    assert graph.n == 3 and graph.e == 0


def test_reversed_edges_are_normalised():
    graph = load('graph-cases/reversed.edges')
    assert graph.edge_list() == [(0, 1), (1, 2)]


def test_no_header():
    graph = load('graph-cases/noheader.edges')
    assert graph.n == 5
    assert graph.degree(4) == 1
    assert graph.degree(2) == 0


def test_missing_trailing_newline():
    graph = load_edge_list('n 2\n0 1')
    assert graph.edge_list() == [(0, 1)]


def test_empty_document():
    for text in ('', '# nothing here\n', 'n 0\n'):
        with pytest.raises(EdgeListParserError) as excinfo:
            load_edge_list(text)
        assert 'no vertices' in str(excinfo.value)


def test_load_fp():
    with open('graph-cases/k4.edges') as fp:
        graph = load_fp(fp)
    assert graph.e == 6
    assert graph.degrees.tolist() == [3, 3, 3, 3]


def test_load_fp_rejects_non_file():
    with pytest.raises(EdgeListParserError) as excinfo:
        load_fp('n 3\n')
    assert 'file-like' in str(excinfo.value)


def test_self_loop():
    with pytest.raises(EdgeListParserError) as excinfo:
        load('graph-cases/e_selfloop.edges')
    assert 'Self-loop 2 2 at line 3' in str(excinfo.value)


def test_duplicate_edge():
    with pytest.raises(EdgeListParserError) as excinfo:
        load('graph-cases/e_duplicate.edges')
    assert 'Duplicate edge 0 1 at line 3' in str(excinfo.value)


def test_out_of_range():
    with pytest.raises(EdgeListParserError) as excinfo:
        load('graph-cases/e_range.edges')
    assert 'Vertex 3 out of range 0..2 at line 3' in str(excinfo.value)


def test_illegal_character():
    with pytest.raises(EdgeListLexerError) as excinfo:
        load('graph-cases/e_illegal.edges')
    assert "Illegal character 'x' at line 3" == str(excinfo.value)


def test_incomplete_line():
    with pytest.raises(EdgeListGrammarError) as excinfo:
        load('graph-cases/e_incomplete.edges')
    assert 'Incomplete line 3' == str(excinfo.value)


def test_header_position():
    with pytest.raises(EdgeListParserError) as excinfo:
        load('graph-cases/e_header_late.edges')
    assert 'must precede edges' in str(excinfo.value)

    with pytest.raises(EdgeListParserError) as excinfo:
        load('graph-cases/e_header_twice.edges')
    assert 'Duplicate vertex count header at line 2' in str(excinfo.value)


def test_missing_file():
    with pytest.raises(OSError):
        load('graph-cases/no_such_file.edges')


def test_dumps():
    graph = Graph.from_edges(4, [(2, 3), (1, 0)])
    assert dumps_edge_list(graph) == 'n 4\n0 1\n2 3\n'


def test_dump_then_load():
    graph = gen_gnp(40, 0.2, seed=5)
    buf = io.StringIO()
    dump_edge_list(graph, buf)
    buf.seek(0)
    assert load_fp(buf) == graph


def test_isolated_tail_vertices_survive_dump():
    graph = Graph.from_edges(6, [(0, 1)])
    assert load_edge_list(dumps_edge_list(graph)).n == 6


def test_load_in_sub_thread(reraise):
    @reraise.wrap
    def f():
        graph = load('graph-cases/k4.edges')
        assert graph.e == 6

    t = threading.Thread(target=f)
    t.start()
    t.join()

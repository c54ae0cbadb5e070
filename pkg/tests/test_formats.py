"""Text-format round trips: every writer's output feeds its own reader."""

import random

import pytest

from fcclib import (
    AqEstimate,
    FccEncoder,
    ParityCode,
    Spectrum,
    build_drm,
    build_graph,
    compare_report,
    linear_function,
    spectrum_of,
)
from fcclib.formats import (
    label_text,
    parse_inline_rows,
    read_adjacency_file,
    read_aq_table,
    read_encoder_file,
    read_function_file,
    read_matrix_csv,
    read_parity_file,
    render_compare_csv,
    write_adjacency_file,
    write_encoder_file,
    write_function_file,
    write_matrix_csv,
    write_parity_file,
    write_spectrum_csv,
)
from helpers import rand_linear, rand_table


def test_parse_inline_rows_variants():
    assert parse_inline_rows("1,1,1,0; 0,1,1,0") == [[1, 1, 1, 0], [0, 1, 1, 0]]
    assert parse_inline_rows("1 1 1 0;0 1 1 0") == [[1, 1, 1, 0], [0, 1, 1, 0]]
    assert parse_inline_rows("1110;0110") == [[1, 1, 1, 0], [0, 1, 1, 0]]
    assert parse_inline_rows("12, 10, 3") == [[12, 10, 3]]
    assert parse_inline_rows(" ; 101 ; ") == [[1, 0, 1]]
    assert parse_inline_rows("") == []


def test_label_text_forms():
    assert label_text((1, 0, 1)) == "101"
    assert label_text(()) == "-"
    assert label_text(7) == "7"
    assert label_text((10, 2)) == "(10, 2)"  # double digits fall back to str()


def test_function_file_round_trips(tmp_path, ex_q2_k4, or_q2_k3, const_q2_k3):
    rng = random.Random(20260818)
    cases = [ex_q2_k4, or_q2_k3, const_q2_k3]
    for _ in range(10):
        q = rng.choice([2, 3])
        k = rng.randrange(1, 4)
        if rng.random() < 0.5:
            cases.append(rand_linear(rng, q, k, rng.randrange(0, k + 1)))
        else:
            cases.append(rand_table(rng, q, k, rng.randrange(1, q**k + 1)))
    for i, f in enumerate(cases):
        path = tmp_path / f"f{i}.func"
        write_function_file(path, f, header_lines=["round-trip case"])
        back = read_function_file(path)
        assert back.q == f.q and back.k == f.k and back.mode == f.mode
        if f.mode == "linear":
            assert back.matrix == f.matrix
        else:
            assert back.table == f.table
    assert (tmp_path / "f0.func").read_text().startswith("# round-trip case\n")


def test_function_file_rejections(tmp_path):
    cases = {
        "empty.func": "# only a comment\n",
        "header.func": "2 2 linear\n1 1\n",
        "rows.func": "2 2 2 linear\n1 1\n",
        "rowlen.func": "2 2 1 linear\n1 1 0\n",
        "mode.func": "2 2 1 affine\n1 1\n",
        "tablecount.func": "2 2 0 table\n0 0\n1 1\n",
        "tableline.func": "2 1 0 table\n0 0 9\n1 1\n",
        "tablerank.func": "2 1 0 table\n0 0\n5 1\n",
        "tabledup.func": "2 1 0 table\n0 0\n0 1\n",
    }
    for name, text in cases.items():
        path = tmp_path / name
        path.write_text(text)
        with pytest.raises(ValueError):
            read_function_file(path)


def test_matrix_csv_round_trip(tmp_path, ex_q2_k4):
    for t in (1, 2):
        D = build_drm(ex_q2_k4, t)
        path = tmp_path / f"drm_t{t}.csv"
        write_matrix_csv(path, D, header_lines=["labels are informational"])
        back = read_matrix_csv(path)
        assert back.to_lists() == D.to_lists()
        assert back.labels == tuple(range(D.order))  # labels are not persisted
    empty = tmp_path / "empty.csv"
    empty.write_text("# nothing\n")
    with pytest.raises(ValueError):
        read_matrix_csv(empty)


def test_parity_file_round_trip(tmp_path):
    code = ParityCode(q=3, r=2, words=((0, 0), (1, 2), (2, 1)))
    path = tmp_path / "parity.txt"
    write_parity_file(path, code, header_lines=["three words"])
    back = read_parity_file(path, q=3)
    assert back == code
    assert back.r == 2  # r inferred from the first word
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    with pytest.raises(ValueError):
        read_parity_file(empty, q=3)
    ragged = tmp_path / "ragged.txt"
    ragged.write_text("00\n111\n")
    with pytest.raises(ValueError):
        read_parity_file(ragged, q=2)
    alien = tmp_path / "alien.txt"
    alien.write_text("02\n")
    with pytest.raises(ValueError):
        read_parity_file(alien, q=2)


def test_encoder_file_round_trip(tmp_path, ex_q2_k4, const_q2_k3):
    E = FccEncoder(
        f=ex_q2_k4,
        t=1,
        r=3,
        parity=tuple((i % 2, (i >> 1) % 2, (i >> 2) % 2) for i in range(16)),
    )
    path = tmp_path / "encoder.txt"
    write_encoder_file(path, E, header_lines=["full table"])
    back = read_encoder_file(path, ex_q2_k4)
    assert back == E

    # r = 0 writes '-' placeholders and reads back empty words
    trivial = FccEncoder(f=const_q2_k3, t=1, r=0, parity=((),) * 8)
    path0 = tmp_path / "trivial.txt"
    write_encoder_file(path0, trivial)
    assert " -" in path0.read_text()
    assert read_encoder_file(path0, const_q2_k3) == trivial


def test_encoder_file_rejections(tmp_path, ex_q2_k4, ex_q3_k2):
    E = FccEncoder(f=ex_q3_k2, t=1, r=1, parity=tuple((i % 3,) for i in range(9)))
    path = tmp_path / "enc.txt"
    write_encoder_file(path, E)
    with pytest.raises(ValueError):
        read_encoder_file(path, ex_q2_k4)  # wrong function shape

    bad_cases = {
        "empty.txt": "",
        "head.txt": "2 2 1\n",
        "count.txt": "3 2 1 1\n0 0\n1 1\n",
        "line.txt": "3 2 1 1\n" + "\n".join(f"{i} 0 9" for i in range(9)),
        "rank.txt": "3 2 1 1\n" + "\n".join(f"{i + 9} 0" for i in range(9)),
        "dup.txt": "3 2 1 1\n0 0\n0 1\n" + "\n".join(f"{i} 0" for i in range(2, 9)),
        "len.txt": "3 2 1 1\n0 00\n" + "\n".join(f"{i} 0" for i in range(1, 9)),
    }
    for name, text in bad_cases.items():
        p = tmp_path / name
        p.write_text(text)
        with pytest.raises(ValueError):
            read_encoder_file(p, ex_q3_k2)


def test_aq_table_reader(tmp_path):
    path = tmp_path / "table.csv"
    path.write_text(
        "# code sizes\n"
        "q,n,d,value,kind\n"
        "2,12,7,24,exact\n"
        "2,13,7,32,upper\n"
        "2,20,7,8192,lower\n"
    )
    table = read_aq_table(path)
    assert len(table) == 3
    assert table.estimate_for(2, 12, 7).kind == "table_exact"
    assert table.estimate_for(2, 13, 7).kind == "table_upper"
    assert table.achievable_redundancy(2, 12, 7) == 8

    short = tmp_path / "short.csv"
    short.write_text("2,12,7,24\n")
    with pytest.raises(ValueError):
        read_aq_table(short)
    badkind = tmp_path / "badkind.csv"
    badkind.write_text("2,12,7,24,best\n")
    with pytest.raises(ValueError):
        read_aq_table(badkind)


def test_compare_csv_rendering():
    rows = compare_report(2, 3, range(2, 5))
    plain = render_compare_csv(rows, header_lines=["sweep"])
    lines = [l for l in plain.splitlines() if not l.startswith("#")]
    assert lines[0] == "k,r_prime,r_bgs,delta_bgs"
    assert len(lines) == 4
    for row, line in zip(rows, lines[1:]):
        assert line == f"{row.k},{row.r_prime},{row.r_bgs},{row.delta_bgs}"

    table_rows = compare_report(
        2, 7, [11, 12],
        table=read_aq_table_from_rows([AqEstimate(2, 12, 7, 24, "table_exact")]),
    )
    with_table = render_compare_csv(table_rows, include_table_columns=True)
    lines = [l for l in with_table.splitlines() if not l.startswith("#")]
    assert lines[0] == "k,r_prime,r_bgs,delta_bgs,delta_blb,delta_bub"
    # k=11 has no table row: both delta cells are empty
    assert lines[1].endswith(",,")
    # k=12 has an exact row but no achievability row: last cell only is empty
    assert not lines[2].endswith(",,") and lines[2].endswith(",")


def read_aq_table_from_rows(rows):
    from fcclib import AqTable

    return AqTable(rows)


def test_spectrum_csv(tmp_path, ex_q2_k3):
    S = spectrum_of(ex_q2_k3, 1, 1)
    path = tmp_path / "spec.csv"
    write_spectrum_csv(path, S, header_lines=["transform order"])
    lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
    assert lines[0] == "index_rank,eigenvalue"
    assert len(lines) == 1 + S.n_vertices
    for i, ev in enumerate(S.eigenvalues):
        assert lines[1 + i] == f"{i},{ev}"


def test_adjacency_round_trip(tmp_path, ex_q3_k2):
    G = build_graph(ex_q3_k2, 1, 1)
    path = tmp_path / "adj.txt"
    write_adjacency_file(path, G, header_lines=["dense rows"])
    dense = read_adjacency_file(path)
    assert len(dense) == G.n_vertices
    for i, row in enumerate(dense):
        for j, bit in enumerate(row):
            assert bit == int(G.has_edge(i, j))

    ragged = tmp_path / "ragged.txt"
    ragged.write_text("01\n1\n")
    with pytest.raises(ValueError):
        read_adjacency_file(ragged)
    alien = tmp_path / "alien.txt"
    alien.write_text("02\n10\n")
    with pytest.raises(ValueError):
        read_adjacency_file(alien)


def test_comment_lines_are_skipped_everywhere(tmp_path):
    path = tmp_path / "weird.func"
    path.write_text(
        "# leading comment\n"
        "\n"
        "2 2 1 linear\n"
        "   # indented comment\n"
        "1 1\n"
        "\n"
    )
    f = read_function_file(path)
    assert f.matrix == ((1, 1),)

"""Smoke tests for the python bindings."""

import dominokl as dk


def test_rank_and_core():
    rc = dk.rank_and_core([4, 3, 3, 1])
    assert rc["rank"] == 2
    assert rc["core"] == [2, 1]
    assert rc["dominoes"] == 4
    assert dk.rank_and_core([])["rank"] == 0


def test_transpose_and_enumerations():
    assert dk.transpose([4, 3, 2, 2]) == [4, 4, 2, 1]
    assert dk.rank_partitions(2, 0) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(dk.bipartitions(2)) == 5
    assert len(dk.rank_partitions(4, 2)) == len(dk.bipartitions(4))


def test_insertion_roundtrip():
    pair = dk.g_r("2 -1 3", 1)
    assert pair["left"]["shape"] == pair["right"]["shape"]
    assert dk.g_r_inverse(pair) == [2, -1, 3]
    empty = dk.g_r([], 2)
    assert empty["left"]["dominoes"] == []


def test_cycles_and_move_through():
    tabs = dk.tableaux([2, 2])
    assert len(tabs) == 2
    cycles = dk.tableau_cycles(tabs[0])
    open_non_core = [c for c in cycles if c["kind"] == "open" and not c["core_open"]]
    assert len(open_non_core) == 1
    moved = dk.move_through(tabs[0], open_non_core[0]["labels"])
    assert sorted(moved["shape"]) in ([1, 1, 2], [1, 3])


def test_symbols():
    out = dk.symbols([4, 3, 2, 2], 2, 5)
    assert out["symbol"]["top"] == [0, 2, 3, 4]
    assert out["symbol"]["bottom"] == [1]
    assert out["bipartition"] == {"d": [1, 1, 1], "f": [1]}
    assert out["sign_bipartition"] == {"d": [1], "f": [3]}
    assert dk.bipartition_to_partition([1, 1, 1], [1], 2) == [4, 3, 2, 2]


def test_truncated_induction():
    out = dk.truncated_induction([4, 3, 2, 2, 2], 4, 1, 3)
    assert out == [[6, 5, 4, 4, 2], [6, 5, 4, 3, 3]]


def test_kl_cells_and_verify(tmp_path):
    cells = dk.kl_cells(2, 1, 1, cache_dir=str(tmp_path))
    sizes = sorted(len(c) for c in cells)
    assert sizes == [1, 1, 3, 3]

    report = dk.verify(2, 1, 1, "all", str(tmp_path))
    assert report["conjecture"]["match"] is True
    assert report["modules"]["all_match"] is True
    assert report["hom"]["match"] is True
    assert report["properties"]["all_pass"] is True


def test_character_table():
    import csv as csvmod
    import io

    table = list(csvmod.reader(io.StringIO(dk.character_table_csv(2))))
    assert len(table) == 6  # header + 5 bipartitions
    assert table[1][1:] == ["1"] * 5  # trivial row


def test_group_helpers():
    assert dk.longest_element(3) == [-1, -2, -3]
    st = dk.length_stats("-1 -2")
    assert st == {"ell": 4, "ell_t": 2, "ell_s": 2}

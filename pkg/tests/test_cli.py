"""End-to-end command-line checks driven through main(argv)."""

import numpy as np
import pytest

from streamdesc import Descriptor, load_descriptors, save_descriptors
from streamdesc.cli import main


def edge_file(tmp_path, name, edges):
    path = tmp_path / name
    path.write_text("".join(f"{u} {v}\n" for u, v in edges))
    return str(path)


def k4_file(tmp_path):
    pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    return edge_file(tmp_path, "k4.txt", pairs)


def classify_bundle(tmp_path):
    """Three triangles (class 0) against three 3-leaf stars (class 1)."""
    edges = []
    indicator = []
    at = 1
    for _ in range(3):
        a, b, c = at, at + 1, at + 2
        edges += [(a, b), (b, c), (a, c)]
        indicator += [len(indicator) // 3 + 1] * 3
        at += 3
    gid = 4
    for _ in range(3):
        hub = at
        edges += [(hub, hub + 1), (hub, hub + 2), (hub, hub + 3)]
        indicator += [gid] * 4
        at += 4
        gid += 1
    root = tmp_path / "bundle"
    root.mkdir()
    (root / "TOY_A.txt").write_text(
        "".join(f"{u}, {v}\n" for u, v in edges))
    (root / "TOY_graph_indicator.txt").write_text(
        "".join(f"{g}\n" for g in indicator))
    (root / "TOY_graph_labels.txt").write_text("0\n0\n0\n1\n1\n1\n")
    return str(root)


# --------------------------------------------------------------- descriptor


def test_descriptor_to_file(tmp_path):
    out = tmp_path / "out.csv"
    code = main([
        "descriptor", "--input", k4_file(tmp_path), "--method", "gabe",
        "--budget", "1.0", "--output", str(out)])
    assert code == 0
    loaded = load_descriptors(out)
    assert len(loaded) == 1
    assert loaded[0].method == "gabe"
    assert loaded[0].m == 6
    assert loaded[0].values.shape == (17,)


def test_descriptor_to_stdout(tmp_path, capsys):
    code = main([
        "descriptor", "--input", k4_file(tmp_path), "--method", "maeve",
        "--budget-abs", "6", "--format", "csv"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("graph_id,method,b,seed,n,m,v0,")


def test_descriptor_budget_warning_keeps_exit_zero(tmp_path, capsys):
    square = edge_file(tmp_path, "sq.txt", [(0, 1), (1, 2), (2, 3), (0, 3)])
    code = main([
        "descriptor", "--input", square, "--method", "gabe",
        "--budget", "0.5"])
    assert code == 0
    captured = capsys.readouterr()
    assert "warning: graph 0" in captured.err
    assert captured.out.startswith("graph_id,method,b,seed,n,m")


def test_descriptor_budget_flags_are_exclusive(tmp_path, capsys):
    path = k4_file(tmp_path)
    base = ["descriptor", "--input", path, "--method", "gabe"]
    assert main(base + ["--budget", "0.5", "--budget-abs", "5"]) == 1
    assert main(base) == 1
    capsys.readouterr()


def test_descriptor_missing_file(tmp_path, capsys):
    code = main([
        "descriptor", "--input", str(tmp_path / "nope.txt"),
        "--method", "gabe", "--budget", "0.5"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_descriptor_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\nfoo bar\n")
    code = main([
        "descriptor", "--input", str(bad), "--method", "gabe",
        "--budget", "0.5"])
    assert code == 2
    assert "bad.txt:2" in capsys.readouterr().err


# -------------------------------------------------------------------- exact


def test_exact_descriptor_stdout(tmp_path, capsys):
    tri = edge_file(tmp_path, "tri.txt", [(0, 1), (1, 2), (0, 2)])
    code = main(["exact", "--input", tri, "--method", "maeve"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("graph_id,method,b,seed,n,m,v0,")
    assert lines[0].rstrip().endswith("v19")
    assert len(lines) == 2
    row = lines[1].split(",")
    assert row[6] == "2.0"  # mean degree of a triangle


def test_exact_rejects_oversized_graph(tmp_path, capsys):
    star = edge_file(tmp_path, "star.txt", [(0, i) for i in range(1, 62)])
    code = main(["exact", "--input", star, "--method", "gabe"])
    assert code == 2
    assert "62 vertices" in capsys.readouterr().err


# ----------------------------------------------------------------- distance


def write_descriptor_file(path, graph_ids, method="gabe", offset=0.0):
    dim = 17 if method == "gabe" else 20
    descs = [
        Descriptor(
            graph_id=g, method=method, b=5, seed=0, n=4, m=3,
            values=np.full(dim, 1.0 + offset + g))
        for g in graph_ids]
    save_descriptors(descs, path)
    return str(path)


def test_distance_cross_product(tmp_path, capsys):
    a = write_descriptor_file(tmp_path / "a.csv", [0, 1])
    b = write_descriptor_file(tmp_path / "b.csv", [0, 1, 2])
    code = main(["distance", a, b])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "graph_id_a,graph_id_b,distance"
    assert len(lines) == 1 + 2 * 3
    first = lines[1].split(",")
    assert first[:2] == ["0", "0"]
    assert float(first[2]) == 0.0  # identical vectors
    assert all(float(line.split(",")[2]) >= 0 for line in lines[1:])


def test_distance_rejects_mixed_methods(tmp_path, capsys):
    a = write_descriptor_file(tmp_path / "a.csv", [0])
    b = write_descriptor_file(tmp_path / "b.csv", [0], method="maeve")
    code = main(["distance", a, b])
    assert code == 2
    assert "different methods" in capsys.readouterr().err


def test_distance_missing_file(tmp_path, capsys):
    a = write_descriptor_file(tmp_path / "a.csv", [0])
    assert main(["distance", a, str(tmp_path / "nope.csv")]) == 2
    capsys.readouterr()


# ----------------------------------------------------------------- classify


def test_classify_bundle(tmp_path, capsys):
    bundle = classify_bundle(tmp_path)
    folds_csv = tmp_path / "folds.csv"
    # seed 3 avoids the one-class folds an unstratified 2-way split of six
    # graphs can produce; with both classes in every training half, the
    # exact-budget descriptors separate the two shapes perfectly
    code = main([
        "classify", "--dataset", bundle, "--method", "maeve",
        "--budget-abs", "3", "--folds", "2", "--repeats", "2",
        "--seed", "3", "--output", str(folds_csv)])
    assert code == 0
    out = capsys.readouterr().out
    assert "mean_accuracy 1.0000" in out
    assert "std_accuracy 0.0000" in out
    assert "folds 2 repeats 2" in out
    lines = folds_csv.read_text().strip().splitlines()
    assert lines[0] == "fold,accuracy"
    assert len(lines) == 1 + 2 * 2


def test_classify_requires_dataset(tmp_path, capsys):
    code = main([
        "classify", "--input", "whatever.txt", "--method", "maeve",
        "--budget-abs", "3"])
    assert code == 1
    capsys.readouterr()


# -------------------------------------------------------------- experiments


def test_error_vs_budget_experiment(tmp_path, capsys):
    tri = edge_file(tmp_path, "tri.txt", [(0, 1), (1, 2), (0, 2)])
    code = main([
        "experiment", "error-vs-budget", "--input", tri, "--method", "maeve",
        "--budgets", "0.5,1.0", "--trials", "2"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "budget,mean_error"
    assert len(lines) == 3
    assert lines[1].startswith("0.5,")
    assert lines[2].startswith("1.0,")
    assert float(lines[2].split(",")[1]) == 0.0  # full budget is exact


def test_error_vs_budget_bad_budget_list(tmp_path, capsys):
    tri = edge_file(tmp_path, "tri.txt", [(0, 1), (1, 2), (0, 2)])
    base = ["experiment", "error-vs-budget", "--input", tri,
            "--method", "maeve"]
    assert main(base + ["--budgets", "abc"]) == 1
    assert "comma-separated" in capsys.readouterr().err
    assert main(base + ["--budgets", ","]) == 1
    assert "empty" in capsys.readouterr().err


# ------------------------------------------------------------------ general


def test_module_entry_point(tmp_path):
    import subprocess
    import sys

    tri = edge_file(tmp_path, "tri.txt", [(0, 1), (1, 2), (0, 2)])
    proc = subprocess.run(
        [sys.executable, "-m", "streamdesc", "exact", "--input", tri,
         "--method", "gabe"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("graph_id,method,")


def test_help_exits_zero(capsys):
    assert main(["-h"]) == 0
    assert "COMMAND" in capsys.readouterr().out


def test_usage_errors_exit_one(capsys):
    assert main([]) == 1
    assert main(["frobnicate"]) == 1
    capsys.readouterr()

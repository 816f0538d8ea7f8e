import pytest
from typer.testing import CliRunner

from edge_clique_partition.cli import app
from edge_clique_partition.formats import (
    format_solution,
    parse_instance,
    parse_mapping,
    read_instance,
    read_solution,
)
from edge_clique_partition.model import AwecpInstance, CliquePartition, verify_awecp

from .util import make_tempdir, write_instance

runner = CliRunner()


def test_help():
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for command in ["solve", "kernelize", "verify", "gen", "bench", "oracle"]:
        assert command in result.output


@pytest.mark.parametrize("extra", [[], ["--no-kernel"], ["--threads", "2"], ["--nondeterministic"]])
def test_solve_triangle(triangle, extra):
    with make_tempdir() as d:
        path = write_instance(d, "triangle.awecp", triangle)
        out = d / "triangle.sol"
        result = runner.invoke(app, ["solve", str(path), "--output", str(out), *extra])
        assert result.exit_code == 0, result.output
        assert out.read_text(encoding="utf8") == "s awecp 1\nc 1 2 3\n"


def test_solve_no_instance(star3):
    with make_tempdir() as d:
        path = write_instance(d, "star.awecp", star3)
        out = d / "star.sol"
        result = runner.invoke(app, ["solve", str(path), "-o", str(out), "--stats"])
        assert result.exit_code == 1
        assert out.read_text(encoding="utf8") == "s awecp NO\n"


def test_solve_with_config(path3):
    with make_tempdir() as d:
        path = write_instance(d, "path.awecp", path3.with_budget(2))
        config = d / "oracle.cfg"
        config.write_text(
            '[solver]\n@solvers = "edge-clique-partition.OracleSolver.v1"\n',
            encoding="utf8",
        )
        out = d / "path.sol"
        result = runner.invoke(app, ["solve", str(path), "-o", str(out), "-c", str(config)])
        assert result.exit_code == 0, result.output
        assert verify_awecp(read_instance(path), read_solution(out))


def test_solve_malformed_instance():
    with make_tempdir() as d:
        path = d / "broken.awecp"
        path.write_text("p awecp 2 1 1\ne 1 5 1\n", encoding="utf8")
        result = runner.invoke(app, ["solve", str(path), "-o", str(d / "out.sol")])
        assert result.exit_code == 2


def test_kernelize(k5):
    with make_tempdir() as d:
        path = write_instance(d, "k5.awecp", k5)
        out = d / "kernel.awecp"
        result = runner.invoke(app, ["kernelize", str(path), "-o", str(out)])
        assert result.exit_code == 0, result.output
        kernel = parse_instance(out.read_text(encoding="utf8"))
        assert kernel.vertex_count == 1
        assert kernel.annotated == {0: 1}
        assert "a 1 1" in out.read_text(encoding="utf8")
        lift = parse_mapping((d / "kernel.awecp.map").read_text(encoding="utf8"))
        assert lift.lift_map == (0, 0, 0, 0, 0)


def test_kernelize_no_instance(star3):
    with make_tempdir() as d:
        path = write_instance(d, "star.awecp", star3)
        out = d / "kernel.awecp"
        result = runner.invoke(app, ["kernelize", str(path), "-o", str(out)])
        assert result.exit_code == 1
        assert out.read_text(encoding="utf8") == "s awecp NO\n"


def test_verify(triangle):
    with make_tempdir() as d:
        path = write_instance(d, "triangle.awecp", triangle)
        good = d / "good.sol"
        good.write_text(format_solution(CliquePartition([[0, 1, 2]])), encoding="utf8")
        bad = d / "bad.sol"
        bad.write_text(format_solution(CliquePartition([[0, 1], [1, 2]])), encoding="utf8")
        broken = d / "broken.sol"
        broken.write_text("s awecp 2\nc 1 2\n", encoding="utf8")
        assert runner.invoke(app, ["verify", str(path), str(good)]).exit_code == 0
        assert runner.invoke(app, ["verify", str(path), str(bad)]).exit_code == 1
        assert runner.invoke(app, ["verify", str(path), str(broken)]).exit_code == 2


def test_gen_gn():
    with make_tempdir() as d:
        out = d / "g2.awecp"
        result = runner.invoke(app, ["gen", "gn", "-N", "2", "-o", str(out)])
        assert result.exit_code == 0
        inst = read_instance(out)
        assert (inst.vertex_count, inst.edge_count, inst.k) == (7, 18, 6)
        assert runner.invoke(app, ["gen", "gn", "-N", "1", "-o", str(out)]).exit_code == 2


def test_gen_fpp():
    with make_tempdir() as d:
        out = d / "fano.txt"
        result = runner.invoke(app, ["gen", "fpp", "-N", "2", "-o", str(out)])
        assert result.exit_code == 0
        rows = [
            line.split()
            for line in out.read_text(encoding="utf8").splitlines()
            if not line.startswith("#")
        ]
        assert len(rows) == 7
        assert all(row.count("1") == 3 for row in rows)
        assert runner.invoke(app, ["gen", "fpp", "-N", "6", "-o", str(out)]).exit_code == 2


def test_gen_random_is_deterministic():
    with make_tempdir() as d:
        args = ["gen", "random", "--n", "8", "--p", "0.4", "--k", "3", "--seed", "5"]
        runner.invoke(app, [*args, "-o", str(d / "a.awecp")])
        runner.invoke(app, [*args, "-o", str(d / "b.awecp")])
        assert (d / "a.awecp").read_text(encoding="utf8") == (d / "b.awecp").read_text(
            encoding="utf8"
        )


def test_gen_planted():
    with make_tempdir() as d:
        out, sol = d / "planted.awecp", d / "planted.sol"
        args = ["gen", "planted", "--n", "6", "--cliques", "3", "-o", str(out), "--solution", str(sol)]
        result = runner.invoke(app, args)
        assert result.exit_code == 0, result.output
        assert runner.invoke(app, ["verify", str(out), str(sol)]).exit_code == 0


def test_oracle(triangle, path3):
    with make_tempdir() as d:
        path = write_instance(d, "triangle.awecp", triangle)
        out = d / "count.txt"
        result = runner.invoke(app, ["oracle", str(path), "--count", "-o", str(out)])
        assert result.exit_code == 0
        assert out.read_text(encoding="utf8") == "1\n"
        path = write_instance(d, "path.awecp", path3)
        result = runner.invoke(app, ["oracle", str(path), "-o", str(out)])
        assert result.exit_code == 1
        result = runner.invoke(app, ["oracle", str(path), "--guard", "2", "-o", str(out)])
        assert result.exit_code == 2


def test_bench(triangle, star3):
    with make_tempdir() as d:
        corpus = d / "corpus"
        corpus.mkdir()
        write_instance(corpus, "a.awecp", triangle)
        write_instance(corpus, "b.awecp", star3)
        out = d / "report.csv"
        jsonl = d / "report.jsonl"
        result = runner.invoke(
            app, ["bench", str(corpus), "-o", str(out), "--jsonl", str(jsonl)]
        )
        assert result.exit_code == 0, result.output
        lines = out.read_text(encoding="utf8").splitlines()
        assert lines[0] == "instance,solver,n,m,k,w,kernel_n,candidates,wall_time,verdict"
        assert len(lines) == 5
        assert lines[1].startswith("a.awecp,kernel+fpt,3,3,1,1,")
        assert lines[1].endswith(",YES")
        assert lines[2].startswith("a.awecp,oracle,")
        assert lines[3].endswith(",NO")
        assert lines[4].endswith(",NO")
        assert len(jsonl.read_text(encoding="utf8").splitlines()) == 4


def test_bench_unknown_solver(test_dir):
    result = runner.invoke(app, ["bench", str(test_dir), "--solvers", "magic"])
    assert result.exit_code == 2


def test_verify_messages():
    inst = AwecpInstance(2, ((0, 1, 2),), {}, 1)
    with make_tempdir() as d:
        path = write_instance(d, "double.awecp", inst)
        once = d / "once.sol"
        once.write_text("s awecp 1\nc 1 2\n", encoding="utf8")
        result = runner.invoke(app, ["verify", str(path), str(once)])
        assert result.exit_code == 1
        assert "under-covered" in result.output
        twice = d / "twice.sol"
        twice.write_text("s awecp 2\nc 1 2\nc 1 2\n", encoding="utf8")
        result = runner.invoke(app, ["verify", str(path), str(twice)])
        assert result.exit_code == 1
        assert "budget exceeded" in result.output


def test_kernelize_small_instance(path3):
    inst = path3.with_budget(2)
    with make_tempdir() as d:
        path = write_instance(d, "path.awecp", inst)
        out = d / "kernel.awecp"
        result = runner.invoke(app, ["kernelize", str(path), "-o", str(out), "-m", str(d / "path.map")])
        assert result.exit_code == 0
        assert read_instance(out) == inst
        assert (d / "path.map").read_text(encoding="utf8") == "m 1 1\nm 2 2\nm 3 3\n"


def test_solve_is_deterministic(triangle, path3, k5):
    with make_tempdir() as d:
        for name, inst in [("triangle", triangle), ("path", path3.with_budget(2)), ("k5", k5)]:
            path = write_instance(d, f"{name}.awecp", inst)
            outputs = set()
            for run in range(3):
                out = d / f"{name}.{run}.sol"
                runner.invoke(app, ["solve", str(path), "-o", str(out), "--deterministic", "-t", "2"])
                outputs.add(out.read_text(encoding="utf8"))
            assert len(outputs) == 1


def test_bench_reports_kernel_size(k5):
    with make_tempdir() as d:
        write_instance(d, "k5.awecp", k5)
        out = d / "report.csv"
        result = runner.invoke(app, ["bench", str(d), "--solvers", "kernel+fpt", "-o", str(out)])
        assert result.exit_code == 0, result.output
        row = out.read_text(encoding="utf8").splitlines()[1].split(",")
        assert row[0] == "k5.awecp"
        assert row[6] == "1"
        assert row[-1] == "YES"


@pytest.mark.slow
def test_solve_fano_split_graph():
    with make_tempdir() as d:
        out = d / "g2.awecp"
        runner.invoke(app, ["gen", "gn", "-N", "2", "-o", str(out)])
        sol = d / "g2.sol"
        result = runner.invoke(app, ["solve", str(out), "-o", str(sol), "--stats"])
        assert result.exit_code == 0
        assert len(read_solution(sol)) == 6
        assert runner.invoke(app, ["verify", str(out), str(sol)]).exit_code == 0

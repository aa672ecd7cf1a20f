import pytest

from kspace.cli import main


K2_DIMPS = "domain: a b c d e\ne ~> a\na ~> b\nb d ~> c\n"


@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.dimp"
    path.write_text(K2_DIMPS)
    return path


@pytest.fixture
def b2_file(tmp_path, k2_file):
    rows = tmp_path / "k2.rows"
    base = tmp_path / "b2.base"
    assert main(["compress", "--dimps", str(k2_file), "--out", str(rows)]) == 0
    assert main(["base", "--rows", str(rows), "--out", str(base)]) == 0
    return base


def test_compress_count(k2_file, capsys):
    assert main(["compress", "--dimps", str(k2_file), "--count"]) == 0
    assert capsys.readouterr().out.strip() == "13"


def test_compress_trace_goes_to_stderr(k2_file, capsys):
    assert main(["compress", "--dimps", str(k2_file), "--count", "--trace"]) == 0
    captured = capsys.readouterr()
    assert "step 0" in captured.err


def test_stats_probability(tmp_path, ten_domain, ten_theta, capsys):
    from kspace.eengine import compress_space
    from kspace.rows import serialize_rows

    rows = tmp_path / "k3.rows"
    rows.write_text(serialize_rows(compress_space(ten_domain, ten_theta)))
    assert main(
        ["stats", "--rows", str(rows), "--given-contain", "3,4", "--avoid", "9,10"]
    ) == 0
    assert capsys.readouterr().out.strip() == "8/77"
    assert main(["stats", "--rows", str(rows)]) == 0
    assert capsys.readouterr().out.strip() == "377"


def test_primedimps_output(b2_file, capsys):
    assert main(["primedimps", "--base", str(b2_file)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "domain: a b c d e"
    assert len(lines) == 7
    assert main(["primedimps", "--base", str(b2_file), "--as-circuits"]) == 0
    assert all("@" in l for l in capsys.readouterr().out.strip().splitlines()[1:])


def test_reduce_shrinks_the_prime_base(b2_file, tmp_path, capsys):
    primes = tmp_path / "primes.dimp"
    assert main(["primedimps", "--base", str(b2_file), "--out", str(primes)]) == 0
    assert main(["reduce", "--dimps", str(primes), "--passes", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4


def test_dowling_and_closure_routes_agree(b2_file, tmp_path, capsys):
    assert main(["dowling", "--base", str(b2_file), "--count"]) == 0
    dowling_count = capsys.readouterr().out.strip()
    sigma = tmp_path / "sigma.imp"
    assert main(["sigma", "--base", str(b2_file), "--out", str(sigma),
                 "--map", str(tmp_path / "sigma.map")]) == 0
    assert main(["closure", "--imps", str(sigma), "--count"]) == 0
    assert capsys.readouterr().out.strip() == dowling_count == "13"
    assert (tmp_path / "sigma.map").read_text().count(":") == 6


def test_closure_of_a_set(tmp_path, capsys):
    imps = tmp_path / "s.imp"
    imps.write_text("domain: a b c\na -> b\nb -> c\n")
    assert main(["closure", "--imps", str(imps), "--of", "a"]) == 0
    assert capsys.readouterr().out.split() == ["a", "b", "c"]


def test_atoms_from_base_and_rows_agree(b2_file, tmp_path, capsys):
    assert main(["atoms", "--base", str(b2_file), "--item", "c"]) == 0
    from_base = capsys.readouterr().out
    rows = tmp_path / "k2.rows"
    assert main(["atoms", "--rows", str(rows), "--item", "c"]) == 0
    assert capsys.readouterr().out == from_base
    assert "c d" in from_base


def test_check_verdicts(b2_file, tmp_path, capsys):
    assert main(["check", "--base", str(b2_file)]) == 0
    bad = tmp_path / "bad.base"
    bad.write_text("domain: a b c\na\nb c\n")
    assert main(["check", "--base", str(bad)]) == 1
    circuits = tmp_path / "rc.circ"
    circuits.write_text("domain: a b c\na b @ a\na b c @ a\n")
    assert main(["check", "--circuits", str(circuits)]) == 1
    capsys.readouterr()


def test_gen_theta_roundtrips_through_compress(tmp_path, capsys):
    out = tmp_path / "gen.dimp"
    args = ["gen", "theta", "--w", "8", "--h", "4", "--a", "2", "--b", "2",
            "--seed", "12", "--out", str(out)]
    assert main(args) == 0
    assert main(["compress", "--dimps", str(out), "--count"]) == 0
    assert capsys.readouterr().out.strip().isdigit()


def test_gen_ls_passes_check(tmp_path):
    out = tmp_path / "ls.base"
    assert main(["gen", "ls", "--mu", "3", "--lam", "2", "--kappa", "2",
                 "--nc", "x,y", "--seed", "3", "--out", str(out)]) == 0
    assert main(["check", "--base", str(out)]) == 0


def test_bench_command(tmp_path, capsys):
    suite = tmp_path / "suite.toml"
    suite.write_text(
        '[[instances]]\nkind = "theta"\nseed = 1\nw = 8\nh = 4\na = 2\nb = 2\n'
    )
    out = tmp_path / "report.csv"
    assert main(["bench", "--suite", str(suite), "--out", str(out)]) == 0
    header = out.read_text().splitlines()[0]
    assert header.startswith("name,kind,params,seed,route")


def test_explore_command(b2_file, tmp_path, capsys):
    save = tmp_path / "session.txt"
    assert main(["explore", "--hidden", str(b2_file), "--save", str(save)]) == 0
    assert "states: 13" in capsys.readouterr().out
    assert "domain: a b c d e" in save.read_text()


def test_allow_partial_shrinks_the_domain(tmp_path, capsys):
    base = tmp_path / "partial.base"
    base.write_text("domain: a b c d\na\nb\na b\n")
    assert main(["dowling", "--base", str(base), "--count"]) == 1
    assert main(["dowling", "--base", str(base), "--count", "--allow-partial"]) == 0
    capsys.readouterr()


def test_domain_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.dimp"
    bad.write_text("domain: a b\na ~> a\n")
    assert main(["compress", "--dimps", str(bad), "--count"]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["compress", "--dimps", str(tmp_path / "missing"), "--count"]) == 1
    capsys.readouterr()


def test_resource_guard_exits_2(b2_file, capsys):
    assert main(["dowling", "--base", str(b2_file), "--count", "--limit", "5"]) == 2
    capsys.readouterr()

import io
import json

from diffcolor import parse_graph, recognize_caterpillar, recognize_spider
from diffcolor.cli import run


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestGen:
    def test_regular_cat_golden(self):
        code, out, _ = capture(["gen", "regular-cat", "--spine", "2", "--legs", "2"])
        assert code == 0
        assert out == "p 6 5\ne 1 2\ne 1 3\ne 1 4\ne 2 5\ne 2 6\n"

    def test_out_file(self, tmp_path):
        path = tmp_path / "g.gr"
        code, out, _ = capture(["gen", "spider", "--paths", "1,1,1",
                                "--out", str(path)])
        assert code == 0 and out == ""
        assert path.read_text() == "p 4 3\ne 1 2\ne 1 3\ne 1 4\n"

    def test_random_requires_seed(self):
        code, _, err = capture(["gen", "random-cat"])
        assert code == 2 and "seed" in err

    def test_random_seeded_deterministic(self):
        a = capture(["gen", "random-cat", "--seed", "5"])
        b = capture(["gen", "random-cat", "--seed", "5"])
        assert a == b and a[0] == 0

    def test_missing_flags(self):
        code, _, err = capture(["gen", "regular-cat"])
        assert code == 2 and "requires" in err

    def test_bad_leg_list(self):
        code, _, err = capture(["gen", "cat", "--leg-list", "0,1"])
        assert code == 2

    def test_round_trip_recognition(self):
        for family, flags, counts in [
            ("regular-cat", ["--spine", "3", "--legs", "2"], (2, 2, 2)),
            ("cat", ["--leg-list", "1,0,2"], (1, 0, 2)),
            ("sec53", ["--k", "2", "--delta", "3"], (1, 3, 1, 3, 1)),
        ]:
            code, out, _ = capture(["gen", family] + flags)
            assert code == 0
            shape = recognize_caterpillar(parse_graph(out))
            assert shape.leg_counts in (counts, counts[::-1])
        code, out, _ = capture(["gen", "spider", "--paths", "3,1,2"])
        assert code == 0
        spider = recognize_spider(parse_graph(out))
        assert sorted(spider.path_lengths) == [1, 2, 3]
        code, out, _ = capture(["gen", "random-cat", "--seed", "13"])
        assert code == 0
        assert recognize_caterpillar(parse_graph(out)) is not None


class TestLabel:
    def test_auto_on_regular_caterpillar_is_proved(self):
        for s in range(1, 5):
            for delta in range(1, 3):
                code, out, _ = capture(["label", "--family", "regular-cat",
                                        "--spine", str(s), "--legs", str(delta)])
                assert code == 0
                obj = json.loads(out)
                assert obj["optimal"] == "proved"
                assert obj["scheme"] == "regular-cat"
                assert obj["value"] == obj["guarantee"]

    def test_named_scheme_from_file(self, tmp_path):
        path = tmp_path / "p5.gr"
        path.write_text("p 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")
        code, out, _ = capture(["label", "--in", str(path),
                                "--scheme", "general-cat"])
        assert code == 0
        assert json.loads(out)["optimal"] == "unknown"

    def test_plain_format(self):
        code, out, _ = capture(["label", "--family", "regular-cat", "--spine", "2",
                                "--legs", "2", "--format", "plain"])
        assert code == 0
        assert out == "1 1\n2 6\n3 4\n4 5\n5 2\n6 3\n"

    def test_dot_format(self):
        code, out, _ = capture(["label", "--family", "spider", "--paths", "1,1,1",
                                "--format", "dot"])
        assert code == 0
        assert out.startswith("graph G {")
        assert '1 [label="1"];' in out

    def test_wrong_scheme_for_input(self):
        code, _, err = capture(["label", "--family", "cat", "--leg-list", "2,1",
                                "--scheme", "regular-cat"])
        assert code == 2 and "not a regular caterpillar" in err

    def test_two_input_sources_rejected(self, tmp_path):
        path = tmp_path / "g.gr"
        path.write_text("p 2 1\ne 1 2\n")
        code, _, err = capture(["label", "--in", str(path),
                                "--family", "spider", "--paths", "1,1"])
        assert code == 2 and "exactly one input source" in err

    def test_no_input_source_rejected(self):
        code, _, err = capture(["label"])
        assert code == 2


class TestEval:
    def test_value(self, tmp_path):
        g = tmp_path / "p4.gr"
        g.write_text("p 4 3\ne 1 2\ne 2 3\ne 3 4\n")
        lab = tmp_path / "lab.json"
        lab.write_text(json.dumps({"n": 4, "labels": [2, 4, 1, 3]}))
        code, out, _ = capture(["eval", "--in", str(g), "--labeling", str(lab)])
        assert code == 0
        assert json.loads(out) == {"n": 4, "labels": [2, 4, 1, 3], "value": 2}
        code, out, _ = capture(["eval", "--in", str(g), "--labeling", str(lab),
                                "--format", "plain"])
        assert code == 0 and out == "2\n"

    def test_invalid_labeling(self, tmp_path):
        g = tmp_path / "p2.gr"
        g.write_text("p 2 1\ne 1 2\n")
        lab = tmp_path / "lab.json"
        lab.write_text(json.dumps({"n": 2, "labels": [1, 1]}))
        code, _, err = capture(["eval", "--in", str(g), "--labeling", str(lab)])
        assert code == 2 and "duplicate" in err


class TestBound:
    def test_p5_json(self):
        code, out, _ = capture(["bound", "--family", "cat", "--leg-list", "1,0,1"])
        assert code == 0
        assert json.loads(out) == {"bounds": {"thm1": 2, "thm3": 3}, "best": 2}

    def test_plain(self):
        code, out, _ = capture(["bound", "--family", "regular-cat", "--spine", "3",
                                "--legs", "2", "--format", "plain"])
        assert code == 0
        assert out == "thm1 4\nthm2 4\nbest 4\n"


class TestExact:
    def test_p5(self, tmp_path):
        path = tmp_path / "p5.gr"
        path.write_text("p 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")
        code, out, _ = capture(["exact", "--in", str(path)])
        assert code == 0
        obj = json.loads(out)
        assert obj["dc"] == 2
        assert sorted(obj["labels"]) == [1, 2, 3, 4, 5]
        assert obj["nodes"] > 0 and obj["millis"] >= 0

    def test_plain(self):
        code, out, _ = capture(["exact", "--family", "spider", "--paths", "1,1,1",
                                "--format", "plain"])
        assert code == 0
        assert out.splitlines()[0] == "dc 1"

    def test_limit_refusal_exit_3(self):
        code, _, err = capture(["exact", "--family", "regular-cat", "--spine", "8",
                                "--legs", "1", "--limit-n", "10"])
        assert code == 3 and "exceeds" in err

    def test_timeout_exit_3(self):
        code, _, err = capture(["exact", "--family", "regular-cat", "--spine", "6",
                                "--legs", "1", "--timeout-ms", "0"])
        assert code == 3 and "timed out" in err


class TestCompareMp:
    def test_sec53_small(self):
        code, out, _ = capture(["compare-mp", "--family", "sec53",
                                "--k", "2", "--delta", "3"])
        assert code == 0
        obj = json.loads(out)
        assert obj["n"] == 5 + 3 + 2 * 3
        assert obj["mp"] == 2 * 2 + 1
        assert obj["scheme_value"] >= obj["scheme_guarantee"]
        assert obj["bound_best"] == obj["n"] // 2

    def test_rejects_non_caterpillar(self):
        code, _, err = capture(["compare-mp", "--family", "spider",
                                "--paths", "2,2,2"])
        assert code == 2 and "not a caterpillar" in err


class TestExport:
    def test_plain_graph(self):
        code, out, _ = capture(["export", "--family", "spider", "--paths", "1,1"])
        assert code == 0
        assert out == "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  1 -- 3;\n}\n"

    def test_with_scheme_labels(self):
        code, out, _ = capture(["export", "--family", "regular-cat", "--spine", "1",
                                "--legs", "2", "--scheme", "auto"])
        assert code == 0
        assert out == ('graph G {\n  1 [label="1"];\n  2 [label="2"];\n'
                       '  3 [label="3"];\n  1 -- 2;\n  1 -- 3;\n}\n')

    def test_with_labeling_file(self, tmp_path):
        g = tmp_path / "p3.gr"
        g.write_text("p 3 2\ne 1 2\ne 2 3\n")
        lab = tmp_path / "lab.json"
        lab.write_text(json.dumps({"n": 3, "labels": [1, 3, 2]}))
        code, out, _ = capture(["export", "--in", str(g), "--labeling", str(lab)])
        assert code == 0 and '2 [label="3"];' in out

    def test_rejects_both_label_sources(self, tmp_path):
        g = tmp_path / "p2.gr"
        g.write_text("p 2 1\ne 1 2\n")
        lab = tmp_path / "lab.json"
        lab.write_text(json.dumps({"n": 2, "labels": [1, 2]}))
        code, _, err = capture(["export", "--in", str(g), "--labeling", str(lab),
                                "--scheme", "auto"])
        assert code == 2


class TestErrors:
    def test_unknown_command(self):
        assert run(["frobnicate"], stdout=io.StringIO(), stderr=io.StringIO()) == 2

    def test_missing_file(self):
        code, _, err = capture(["bound", "--in", "/nonexistent/x.gr"])
        assert code == 2

    def test_parse_error_reported(self, tmp_path):
        path = tmp_path / "bad.gr"
        path.write_text("p 2 1\ne 1 5\n")
        code, _, err = capture(["bound", "--in", str(path)])
        assert code == 2 and "line 2" in err


class TestDeterminism:
    def test_identical_argv_identical_output(self):
        argvs = [
            ["gen", "random-cat", "--seed", "99", "--spine", "12", "--legs", "4"],
            ["label", "--family", "cat", "--leg-list", "2,0,1"],
            ["bound", "--family", "spider", "--paths", "2,3"],
        ]
        for argv in argvs:
            assert capture(argv) == capture(argv)

    def test_exact_deterministic_up_to_timing(self):
        a = json.loads(capture(["exact", "--family", "spider", "--paths", "2,2"])[1])
        b = json.loads(capture(["exact", "--family", "spider", "--paths", "2,2"])[1])
        a.pop("millis")
        b.pop("millis")
        assert a == b

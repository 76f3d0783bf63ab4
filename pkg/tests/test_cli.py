import contextlib
import io
import json
import os
import tempfile
import unittest
from unittest import mock
import freemaps.cli as cli

CIRCLE = json.dumps(
    {
        "schema_version": 1,
        "label": "circle",
        "k": 0,
        "weights": [[]],
        "loop": [{"cos": {"1": "1"}}, {"sin": {"1": "1"}}],
    }
)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.run(list(argv))
    return code, out.getvalue(), err.getvalue()


class VerifyCommandTestCase(unittest.TestCase):
    def test_summary(self):
        code, out, _ = run("verify", CIRCLE)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(
            out,
            "circle: FREE, D(0) = 1/1, D(pi) = 1/1, real roots: 0\n",
        )

    def test_json_and_out(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "cert.json")
            code, out, _ = run("verify", CIRCLE, "--json", "--out", path)
            self.assertEqual(code, cli.EXIT_OK)
            with open(path) as f_:
                self.assertEqual(json.load(f_), json.loads(out))
        self.assertEqual(json.loads(out)["verdict"], "FREE")

    def test_not_free(self):
        doc = json.loads(CIRCLE)
        doc["loop"][1] = {"cos": {"1": "1"}}
        code, out, _ = run("verify", json.dumps(doc))
        self.assertEqual(code, cli.EXIT_FAILED)
        self.assertIn("real roots: identically zero", out)

    def test_invalid(self):
        code, _, err = run("verify", '{"k": 1}')
        self.assertEqual(code, cli.EXIT_INVALID)
        self.assertIn("invalid input: missing field 'weights'", err)
        code, _, _ = run("verify", "{not json")
        self.assertEqual(code, cli.EXIT_INVALID)
        code, _, _ = run("verify", "/nonexistent/spec.json")
        self.assertEqual(code, cli.EXIT_INVALID)


class SturmCommandTestCase(unittest.TestCase):
    def test_real_line(self):
        code, out, _ = run("sturm", "[-1, 0, 1]")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('"real_root_count": 2', out)
        self.assertTrue(out.startswith("  i  deg  -inf  +inf\n"))

    def test_interval(self):
        code, out, _ = run("sturm", "[-1, 0, 1]", "--interval", "0", "2")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn('"real_root_count": 1', out)

    def test_errors(self):
        code, _, _ = run("sturm", "[]")
        self.assertEqual(code, cli.EXIT_ERROR)
        code, _, _ = run("sturm", "[-1, 0, 1]", "--interval", "1", "2")
        self.assertEqual(code, cli.EXIT_ERROR)
        code, _, _ = run("sturm", "[1, 0.5]")
        self.assertEqual(code, cli.EXIT_INVALID)


class ObstructCommandTestCase(unittest.TestCase):
    def test_counting_bound(self):
        code, out, _ = run("obstruct", "--m", "6")
        self.assertEqual(code, cli.EXIT_FAILED)
        self.assertEqual(out, "fails: floor(q_m/2)=13 < 15\n")

    def test_registry_weights(self):
        code, out, _ = run("obstruct", "--m", "2")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out, "passes: r=2 ≥ 1, rank 1 = 1\n")

    def test_given_weights(self):
        code, out, _ = run(
            "obstruct",
            "--m",
            "3",
            "--weights",
            "[[1,0],[-1,0],[0,1],[0,-1]]",
        )
        self.assertEqual(code, cli.EXIT_FAILED)
        self.assertEqual(out, "fails: r=4 ≥ 3, rank 2 ≠ 3\n")

    def test_bad_weights(self):
        code, _, _ = run("obstruct", "--m", "3", "--weights", "[1, 2]")
        self.assertEqual(code, cli.EXIT_INVALID)


class CollarCommandTestCase(unittest.TestCase):
    def test_published_profile(self):
        code, out, _ = run("collar")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(json.loads(out)["verdict"], "FREE_ON_COLLAR")

    def test_jet_mismatch(self):
        profile = '{"a": ["1"], "c": ["0", "0", "-1/2"]}'
        code, out, _ = run("collar", profile)
        self.assertEqual(code, cli.EXIT_FAILED)
        self.assertEqual(json.loads(out)["verdict"], "JET_MISMATCH")


class ReproCommandTestCase(unittest.TestCase):
    def test(self):
        with tempfile.TemporaryDirectory() as directory:
            code, out, _ = run(
                "repro",
                "--case",
                "t2",
                "--case",
                "circle",
                "--out-dir",
                directory,
            )
            self.assertEqual(code, cli.EXIT_OK)
            self.assertEqual(
                sorted(os.listdir(directory)), ["circle.json", "t2.json"]
            )
        self.assertTrue(out.startswith("t2:     D(pi) = -31/1 [ok]"))

    def test_unknown_case(self):
        code, _, _ = run("repro", "--case", "t9")
        self.assertEqual(code, cli.EXIT_INVALID)


class SearchCommandTestCase(unittest.TestCase):
    def test(self):
        config = {
            "template": json.loads(CIRCLE),
            "free": [{"component": 0, "term": "cos1", "bounds": ["1", "2"]}],
            "denominator": 10,
            "restarts": 1,
        }
        code, out, _ = run("search", json.dumps(config))
        self.assertEqual(code, cli.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(len(lines), 1)
        candidate = json.loads(lines[0])
        self.assertEqual(candidate["coefficients"], ["2/1"])
        self.assertEqual(candidate["certified"]["verdict"], "FREE")

    def test_invalid_options(self):
        base = {
            "template": json.loads(CIRCLE),
            "free": [{"component": 0, "term": "cos1", "bounds": ["1", "2"]}],
        }
        for key, value in (
            ("grid_size", "64"),
            ("seed", "x"),
            ("free", 5),
            ("denominator", 0),
        ):
            with self.subTest(key=key):
                code, out, err = run(
                    "search", json.dumps({**base, key: value})
                )
                self.assertEqual(code, cli.EXIT_INVALID)
                self.assertEqual(out, "")
                self.assertIn("invalid input: ", err)
                self.assertNotIn("Traceback", err)

    def test_unexpected_error(self):
        config = {"template": json.loads(CIRCLE), "restarts": 1}
        with mock.patch(
            "freemaps.search.climb.search", side_effect=RuntimeError("boom")
        ):
            code, _, _ = run("search", json.dumps(config))
        self.assertEqual(code, cli.EXIT_ERROR)


class ParserTestCase(unittest.TestCase):
    def test_missing_command(self):
        code, _, _ = run()
        self.assertEqual(code, cli.EXIT_INVALID)

    def test_help(self):
        code, out, _ = run("--help")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("obstruct", out)

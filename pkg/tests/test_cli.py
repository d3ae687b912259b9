import json
import os
import unittest
from pathlib import Path

from click.testing import CliRunner

from opcyl import __version__
from opcyl.cli.main import main

FIXTURES = Path(__file__).parent / "fixtures"


class TestElementCommands(unittest.TestCase):
    """Test the verbs that print one element"""

    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(main, list(args))

    def test_diff(self):
        """Test d of a composite that is a cycle"""
        result = self.invoke("diff", "-p", "ainf", "-e", "mu_2 o1 mu_2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "0")

        result = self.invoke("diff", "-p", "ainf", "-g", "mu_3")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "mu_2(id, mu_2) - mu_2(mu_2, id)")

    def test_cyl_diff(self):
        """Test d(sigma mu_2) in the cylinder"""
        result = self.invoke("cyl-diff", "-p", "ainf", "-g", "sigma mu_2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "i0:mu_2 - i1:mu_2")

        latex = self.invoke("cyl-diff", "-p", "ainf", "-g", "sigma:mu_3", "-f", "latex")
        self.assertEqual(latex.exit_code, 0, latex.output)
        self.assertIn(r"\sigma", latex.output)

    def test_homotopy(self):
        """Test h on i1 and the stage check"""
        result = self.invoke("homotopy", "-p", "ainf", "-e", "i1:mu_2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "sigma:mu_2")

        refused = self.invoke("homotopy", "-p", "ainf", "-e", "i1:mu_3", "--stage", "1")
        self.assertEqual(refused.exit_code, 2, refused.output)
        self.assertIn("Error", refused.output)

    def test_double_and_reverse(self):
        """Test the linear maps and their refusal on A-infinity"""
        result = self.invoke("double", "-p", "assoc-der", "-g", "sigma D_2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "sigma0:D_2 + sigma1:D_2")

        result = self.invoke("reverse", "-p", "assoc-der", "-g", "sigma D_2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "-sigma:D_2")

        result = self.invoke("reverse", "-p", "cyl:assoc-der", "-g", "i0 D_1")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "i1:D_1")

        refused = self.invoke("double", "-p", "ainf", "-g", "sigma mu_3")
        self.assertEqual(refused.exit_code, 3, refused.output)
        self.assertIn("Not linear", refused.output)

    def test_usage_errors(self):
        """Test the exit code 2 cases"""
        cases = [
            ("diff", "-p", "lie", "-e", "mu_2"),
            ("diff", "-p", "ainf"),
            ("diff", "-p", "ainf", "-e", "mu_2", "-g", "mu_2"),
            ("diff", "-p", "ainf", "-e", "mu_2 o1"),
            ("diff", "-p", "ainf", "-g", "mu_1"),
            ("--cache", "-1", "diff", "-p", "ainf", "-e", "mu_2"),
        ]
        for args in cases:
            result = self.invoke(*args)
            self.assertEqual(result.exit_code, 2, f"{args}: {result.output}")

    def test_cache_option(self):
        """Test a bounded homotopy memo from the command line"""
        result = self.invoke("--cache", "16", "homotopy", "-p", "ainf", "-e", "i1:mu_2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(), "sigma:mu_2")

    def test_version(self):
        result = self.invoke("--version")
        self.assertEqual(result.exit_code, 0)
        self.assertIn(__version__, result.output)


class TestExportCommand(unittest.TestCase):
    """Test the export verb"""

    def setUp(self):
        self.runner = CliRunner()

    def test_json_to_stdout(self):
        """Test the JSON document of mu_3 o2 mu_2"""
        result = self.runner.invoke(main, ["export", "-p", "ainf", "-e", "mu_3 o2 mu_2"])
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.output)
        self.assertEqual((data["arity"], data["degree"]), (4, 1))
        self.assertEqual(data["terms"][0]["tree"]["label"], "plain:mu_3/3")

    def test_write_and_read_back(self):
        """Test --output followed by --read"""
        with self.runner.isolated_filesystem():
            written = self.runner.invoke(main, ["export", "-p", "cyl:ainf", "-g", "sigma mu_3", "-o", "s.json"])
            self.assertEqual(written.exit_code, 0, written.output)
            self.assertIn("Wrote s.json", written.output)
            self.assertTrue(os.path.exists("s.json"))
            with open("s.json") as f:
                expected = json.load(f)

            read = self.runner.invoke(main, ["export", "-p", "cyl:ainf", "--read", "s.json"])
            self.assertEqual(read.exit_code, 0, read.output)
            self.assertEqual(json.loads(read.output), expected)

    def test_latex(self):
        """Test the LaTeX form with and without trees"""
        result = self.runner.invoke(main, ["export", "-p", "ainf", "-g", "mu_3", "-f", "latex", "--name", "m"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("tikzpicture", result.output)

        plain = self.runner.invoke(main, ["export", "-p", "ainf", "-g", "mu_3", "-f", "latex", "--no-trees",
                                          "--standalone"])
        self.assertEqual(plain.exit_code, 0, plain.output)
        self.assertNotIn("tikzpicture", plain.output)
        self.assertIn(r"\documentclass", plain.output)


class TestVerifyCommand(unittest.TestCase):
    """Test the verify verb"""

    def setUp(self):
        self.runner = CliRunner()

    def test_passing_suite(self):
        result = self.runner.invoke(main, ["verify", "sdr", "d2", "--max-arity", "3", "--max-vertices", "2",
                                           "--samples", "10"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("All checks passed!", result.output)

    def test_failing_presentation(self):
        """Test that a presentation with d^2 != 0 exits with 1"""
        result = self.runner.invoke(main, ["verify", "d2", "-p", str(FIXTURES / "bad_d2.yaml"),
                                           "--max-arity", "3", "--max-vertices", "2"])
        self.assertEqual(result.exit_code, 1, result.output)
        self.assertIn("d2 failed", result.output)

    def test_unknown_suite(self):
        result = self.runner.invoke(main, ["verify", "nope"])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("nope", result.output)

    def test_linear_refusal(self):
        """Test exit code 3 when the linear suite meets A-infinity"""
        result = self.runner.invoke(main, ["verify", "linear", "-p", "ainf", "--max-arity", "3",
                                           "--max-vertices", "2"])
        self.assertEqual(result.exit_code, 3, result.output)


class TestFileCommands(unittest.TestCase):
    """Test validate and show"""

    def setUp(self):
        self.runner = CliRunner()

    def test_validate_good_file(self):
        result = self.runner.invoke(main, ["validate", str(FIXTURES / "ainf3.yaml")])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("Validation successful!", result.output)
        self.assertIn("d^2 = 0", result.output)

    def test_validate_bad_files(self):
        """Test a file with d^2 != 0 and a file that does not validate"""
        result = self.runner.invoke(main, ["validate", str(FIXTURES / "bad_d2.yaml")])
        self.assertEqual(result.exit_code, 1, result.output)

        result = self.runner.invoke(main, ["validate", str(FIXTURES / "broken.yaml")])
        self.assertEqual(result.exit_code, 1, result.output)
        self.assertIn("Validation failed with errors!", result.output)

    def test_show(self):
        """Test the catalog listing, a generator table and the file view"""
        listing = self.runner.invoke(main, ["show"])
        self.assertEqual(listing.exit_code, 0, listing.output)
        self.assertIn("Presentations", listing.output)
        self.assertIn("assoc-der", listing.output)

        table = self.runner.invoke(main, ["show", "-p", "ainf", "--max-arity", "3"])
        self.assertEqual(table.exit_code, 0, table.output)
        self.assertIn("mu_3", table.output)
        self.assertNotIn("mu_4", table.output)

        cylinder = self.runner.invoke(main, ["show", "-p", "cyl:ainf", "--max-arity", "2"])
        self.assertEqual(cylinder.exit_code, 0, cylinder.output)
        self.assertIn("wraps ainf", cylinder.output)

        source = self.runner.invoke(main, ["show", "-p", str(FIXTURES / "ainf3.yaml"), "--source"])
        self.assertEqual(source.exit_code, 0, source.output)
        self.assertIn("m3", source.output)


if __name__ == "__main__":
    unittest.main()

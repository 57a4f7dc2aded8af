"""CLI commands, exit codes, and report files."""

import json

import pytest
from click.testing import CliRunner

from trolldetect import MassFunction, Message, MessageFrame, Thread, thread_to_dict
from trolldetect.cli import main
from trolldetect.simulate import spec_to_dict, example1


@pytest.fixture
def runner():
    return CliRunner()


def write_degenerate_thread(path):
    """All users post the identical bba: per-user scores have no spread."""
    mf = MessageFrame(topic_count=2, relevant_topic=1)
    bba = MassFunction(mf.frame, {mf.relevant_set(): 0.9, mf.frame.full_set: 0.1})
    thread = Thread(
        frame=mf,
        users=("U1", "U2"),
        messages=(
            Message(author="U1", rank=1, bba=bba),
            Message(author="U2", rank=2, bba=bba),
        ),
    )
    path.write_text(json.dumps(thread_to_dict(thread)))


class TestSimulate:
    def test_builtin_scenario(self, runner, tmp_path):
        out = tmp_path / "thread.json"
        result = runner.invoke(
            main, ["simulate", "--scenario", "example1", "--seed", "42", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        data = json.loads(out.read_text())
        assert len(data["messages"]) == 16
        assert data["meta"]["seed"] == 42
        assert "generator" in data["meta"]

    def test_example2_message_count(self, runner, tmp_path):
        out = tmp_path / "thread.json"
        result = runner.invoke(
            main, ["simulate", "--scenario", "example2", "--out", str(out)]
        )
        assert result.exit_code == 0
        assert len(json.loads(out.read_text())["messages"]) == 31

    def test_spec_file(self, runner, tmp_path):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(json.dumps(spec_to_dict(example1())))
        out = tmp_path / "thread.json"
        result = runner.invoke(
            main, ["simulate", "--spec", str(spec_path), "--out", str(out)]
        )
        assert result.exit_code == 0
        assert out.exists()

    def test_missing_spec_file_is_io_error(self, runner, tmp_path):
        result = runner.invoke(
            main,
            ["simulate", "--spec", str(tmp_path / "nope.json"), "--out", str(tmp_path / "o.json")],
        )
        assert result.exit_code == 1

    def test_invalid_spec_is_validation_error(self, runner, tmp_path):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(json.dumps({"topic_count": 2}))
        result = runner.invoke(
            main, ["simulate", "--spec", str(spec_path), "--out", str(tmp_path / "o.json")]
        )
        assert result.exit_code == 2

    def test_scenario_and_spec_together_rejected(self, runner, tmp_path):
        result = runner.invoke(
            main,
            [
                "simulate",
                "--scenario",
                "example1",
                "--spec",
                "x.json",
                "--out",
                str(tmp_path / "o.json"),
            ],
        )
        assert result.exit_code == 2

    def test_unwritable_out_is_io_error(self, runner, tmp_path):
        result = runner.invoke(
            main,
            [
                "simulate",
                "--scenario",
                "example1",
                "--out",
                str(tmp_path / "no" / "such" / "dir" / "o.json"),
            ],
        )
        assert result.exit_code == 1


class TestDetect:
    def test_reports_the_troll(self, runner, tmp_path):
        thread_path = tmp_path / "thread.json"
        runner.invoke(
            main, ["simulate", "--scenario", "example1", "--out", str(thread_path)]
        )
        result = runner.invoke(main, ["detect", "--thread", str(thread_path)])
        assert result.exit_code == 0, result.output
        assert "trolls" in result.output
        troll_line = next(
            line for line in result.output.splitlines() if line.startswith("trolls")
        )
        assert troll_line.endswith("U4")

    def test_json_report_round_trips(self, runner, tmp_path):
        thread_path = tmp_path / "thread.json"
        report_path = tmp_path / "report.json"
        runner.invoke(
            main, ["simulate", "--scenario", "example1", "--out", str(thread_path)]
        )
        result = runner.invoke(
            main,
            ["detect", "--thread", str(thread_path), "--json", str(report_path)],
        )
        assert result.exit_code == 0
        doc = json.loads(report_path.read_text())
        assert doc["report"]["trolls"] == ["U4"]
        assert doc["report"]["others"] == ["U1", "U2", "U3"]
        assert set(doc["report"]["per_user"]) == {"U1", "U2", "U3", "U4"}
        assert len(doc["report"]["per_message"]) == 16
        assert doc["meta"]["input"] == str(thread_path)
        # serialized floats reload to the exact same values
        again = json.loads(json.dumps(doc))
        assert again == doc

    def test_json_report_body_is_run_independent(self, runner, tmp_path):
        thread_path = tmp_path / "thread.json"
        runner.invoke(
            main, ["simulate", "--scenario", "example2", "--out", str(thread_path)]
        )
        bodies = []
        for name in ("r1.json", "r2.json"):
            report_path = tmp_path / name
            runner.invoke(
                main, ["detect", "--thread", str(thread_path), "--json", str(report_path)]
            )
            bodies.append(json.loads(report_path.read_text())["report"])
        assert bodies[0] == bodies[1]

    def test_missing_thread_is_io_error(self, runner, tmp_path):
        result = runner.invoke(main, ["detect", "--thread", str(tmp_path / "no.json")])
        assert result.exit_code == 1

    def test_malformed_json_is_validation_error(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        result = runner.invoke(main, ["detect", "--thread", str(bad)])
        assert result.exit_code == 2

    def test_invalid_masses_are_validation_error(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(
            json.dumps(
                {
                    "topic_count": 1,
                    "relevant_topic": 1,
                    "users": ["U1", "U2"],
                    "messages": [
                        {"rank": 1, "author": "U1", "bba": [{"set": ["Topic_1"], "mass": 0.5}]},
                        {"rank": 2, "author": "U2", "bba": [{"set": ["Topic_1"], "mass": 1.0}]},
                    ],
                }
            )
        )
        result = runner.invoke(main, ["detect", "--thread", str(bad)])
        assert result.exit_code == 2

    def test_rank_gap_is_validation_error(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(
            json.dumps(
                {
                    "topic_count": 1,
                    "relevant_topic": 1,
                    "users": ["U1", "U2"],
                    "messages": [
                        {"rank": 1, "author": "U1", "bba": [{"set": ["Topic_1"], "mass": 1.0}]},
                        {"rank": 3, "author": "U2", "bba": [{"set": ["Topic_1"], "mass": 1.0}]},
                    ],
                }
            )
        )
        result = runner.invoke(main, ["detect", "--thread", str(bad)])
        assert result.exit_code == 2

    def test_degenerate_thread_exits_3_without_partial_report(self, runner, tmp_path):
        thread_path = tmp_path / "thread.json"
        report_path = tmp_path / "report.json"
        write_degenerate_thread(thread_path)
        result = runner.invoke(
            main, ["detect", "--thread", str(thread_path), "--json", str(report_path)]
        )
        assert result.exit_code == 3
        assert not report_path.exists()


class TestConflictCommand:
    @pytest.fixture
    def thread_path(self, runner, tmp_path):
        path = tmp_path / "thread.json"
        runner.invoke(main, ["simulate", "--scenario", "example1", "--out", str(path)])
        return path

    def test_identical_messages(self, runner, tmp_path):
        path = tmp_path / "thread.json"
        mf = MessageFrame(topic_count=2, relevant_topic=1)
        bba = MassFunction(mf.frame, {mf.relevant_set(): 1.0})
        thread = Thread(
            frame=mf,
            users=("U1", "U2"),
            messages=(
                Message(author="U1", rank=1, bba=bba),
                Message(author="U2", rank=2, bba=bba),
            ),
        )
        path.write_text(json.dumps(thread_to_dict(thread)))
        result = runner.invoke(
            main, ["conflict", "--thread", str(path), "--a", "1", "--b", "2"]
        )
        assert result.exit_code == 0
        assert "conflict               : 0.000000000000" in result.output

    def test_disjoint_certain_messages(self, runner, tmp_path):
        path = tmp_path / "thread.json"
        mf = MessageFrame(topic_count=2, relevant_topic=1)
        thread = Thread(
            frame=mf,
            users=("U1", "U2"),
            messages=(
                Message(author="U1", rank=1, bba=MassFunction(mf.frame, {mf.relevant_set(): 1.0})),
                Message(author="U2", rank=2, bba=MassFunction(mf.frame, {mf.topic_set(2): 1.0})),
            ),
        )
        path.write_text(json.dumps(thread_to_dict(thread)))
        result = runner.invoke(
            main, ["conflict", "--thread", str(path), "--a", "1", "--b", "2"]
        )
        assert result.exit_code == 0
        assert "conflict               : 1.000000000000" in result.output

    def test_nested_messages_conflict_zero(self, runner, tmp_path):
        path = tmp_path / "thread.json"
        mf = MessageFrame(topic_count=2, relevant_topic=1)
        nested = MassFunction(
            mf.frame, {mf.relevant_set(): 0.5, mf.frame.full_set: 0.5}
        )
        thread = Thread(
            frame=mf,
            users=("U1", "U2"),
            messages=(
                Message(author="U1", rank=1, bba=nested),
                Message(author="U2", rank=2, bba=MassFunction.vacuous(mf.frame)),
            ),
        )
        path.write_text(json.dumps(thread_to_dict(thread)))
        result = runner.invoke(
            main, ["conflict", "--thread", str(path), "--a", "1", "--b", "2"]
        )
        assert result.exit_code == 0
        assert "symmetric inclusion    : 1.000000000000" in result.output
        assert "conflict               : 0.000000000000" in result.output

    def test_bad_rank_exits_2(self, runner, thread_path):
        result = runner.invoke(
            main, ["conflict", "--thread", str(thread_path), "--a", "1", "--b", "99"]
        )
        assert result.exit_code == 2

import json
from datetime import datetime, timedelta, timezone

import pytest
from click.testing import CliRunner

from mediawatch.cli import main
from mediawatch.timeutil import to_rfc3339

NOW = datetime(2016, 9, 10, 12, 0, 0, tzinfo=timezone.utc)


@pytest.fixture
def runner():
    return CliRunner()


def dataset_line(text, lang, label):
    return json.dumps({"text": text, "lang": lang, "label": label})


@pytest.fixture
def dataset(tmp_path):
    lines = []
    for i in range(8):
        lines.append(dataset_line(f"zubpos alpha bravo {i % 3}", "en", "positive"))
        lines.append(dataset_line(f"zubneg charlie delta {i % 3}", "en", "negative"))
        lines.append(dataset_line(f"zubneu echo foxtrot {i % 3}", "en", "neutral"))
    path = tmp_path / "dataset.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


class TestTrainEval:
    def test_train_then_eval(self, runner, dataset, tmp_path):
        model_path = tmp_path / "model.bin"
        res = runner.invoke(
            main,
            ["train", "--data", str(dataset), "--lang", "en", "--C", "0.1",
             "--folds", "4", "--seed", "7", "--out", str(model_path)],
        )
        assert res.exit_code == 0, res.output
        assert "acc\tfpos\tfneg\tfneu" in res.output
        assert model_path.exists()

        res = runner.invoke(main, ["eval", "--model", str(model_path), "--data", str(dataset)])
        assert res.exit_code == 0, res.output
        lines = res.output.strip().splitlines()
        assert lines[0] == "acc\tfpos\tfneg\tfneu"
        acc = float(lines[1].split("\t")[0])
        assert acc == 100.0

    def test_train_no_matching_lang(self, runner, dataset, tmp_path):
        res = runner.invoke(
            main,
            ["train", "--data", str(dataset), "--lang", "fr", "--out", str(tmp_path / "m.bin")],
        )
        assert res.exit_code != 0


class TestRunCommand:
    def test_run_replay(self, runner, tmp_path):
        taxonomy = tmp_path / "taxonomy.tsv"
        taxonomy.write_text("politics/pnv\t\\bPNV\\b\t*\t\n", encoding="utf-8")
        replay = tmp_path / "replay.jsonl"
        lines = [
            json.dumps({
                "native_id": f"t{i}",
                "text": f"Consulta los resultados del PNV en las elecciones {i}",
                "author_id": "u1",
                "timestamp": to_rfc3339(NOW + timedelta(seconds=i)),
            })
            for i in range(5)
        ]
        replay.write_text("\n".join(lines) + "\n", encoding="utf-8")
        sources = tmp_path / "sources.tsv"
        sources.write_text(f"tw\tstream_replay\t{replay}\n", encoding="utf-8")
        config = tmp_path / "config.json"
        config.write_text(json.dumps({
            "db_path": "m.db",
            "taxonomy_path": "taxonomy.tsv",
            "sources_path": "sources.tsv",
            "workers": 2,
        }), encoding="utf-8")
        res = runner.invoke(main, ["run", "--config", str(config), "--workers", "2"])
        assert res.exit_code == 0, res.output
        assert "processed=5" in res.output
        assert "mentions=5" in res.output


class TestCensusCommand:
    def test_census_build(self, runner, tmp_path):
        stream = tmp_path / "stream.jsonl"
        stream.write_text(
            "\n".join(
                json.dumps({
                    "native_id": f"s{i}",
                    "text": "kaixo lagunak zer moduz zaudete gaur",
                    "author_id": f"r{i}",
                    "timestamp": to_rfc3339(NOW),
                    "geo": [43.0, -2.5],
                })
                for i in range(10)
            ) + "\n",
            encoding="utf-8",
        )
        edges = []
        for i in range(10, 40):
            edges.append(f"r{i}\tr{i % 10}")
            edges.append(f"r{i % 10}\tr{i}")
        for i in range(40, 60):
            edges.append(f"x{i}\tr{i % 5}")
        graph = tmp_path / "graph.tsv"
        graph.write_text("\n".join(edges) + "\n", encoding="utf-8")
        labels = tmp_path / "labels.tsv"
        labels.write_text(
            "\n".join(f"r{i}\t1" for i in range(40))
            + "\n"
            + "\n".join(f"x{i}\t0" for i in range(40, 60))
            + "\n",
            encoding="utf-8",
        )
        out = tmp_path / "census.tsv"
        res = runner.invoke(main, [
            "census", "build", "--stream", str(stream), "--graph", str(graph),
            "--bbox", "-3.5,42.5,-1.5,43.5", "--manual", str(labels), "--out", str(out),
        ])
        assert res.exit_code == 0, res.output
        assert out.exists()
        content = out.read_text(encoding="utf-8")
        assert "seed_geo" in content and "manual" in content

    def test_help_lists_commands(self, runner):
        res = runner.invoke(main, ["--help"])
        assert res.exit_code == 0
        for cmd in ("run", "serve", "train", "eval", "census"):
            assert cmd in res.output

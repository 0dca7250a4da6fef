"""`monitor` command line: run the pipeline, serve the API, train and
evaluate polarity models, and build the regional census."""

from __future__ import annotations

import sys

import click

from .config import MonitorConfig, load_config


def _load_stack(resources_dir: str | None, nlp_backend: str = "lexicon"):
    from .langstack import LanguageStack

    return LanguageStack.load(resources_dir, nlp_backend)


@click.group()
def main() -> None:
    """Real-time keyword monitoring of social media and digital press."""


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--workers", type=int, default=None, help="pipeline worker threads")
@click.option("--replay-speed", default="max", show_default=True,
              help="replay pacing: max, realtime, or a speed-up factor")
def run(config_path: str, workers: int | None, replay_speed: str) -> None:
    """Run the ingestion pipeline against the configured sources."""
    from .ingest import load_sources_file
    from .pipeline import MonitorService

    config = load_config(config_path)
    if not config.sources_path:
        raise click.ClickException("config has no sources_path")
    if not config.taxonomy_path:
        raise click.ClickException("config has no taxonomy_path")
    sources = load_sources_file(config.sources_path)
    speed: float | str
    if replay_speed == "max":
        speed = "max"
    elif replay_speed == "realtime":
        speed = 1.0
    else:
        speed = float(replay_speed)
    service = MonitorService(config)
    try:
        stats = service.run(sources, workers=workers, replay_speed=speed)
    except KeyboardInterrupt:
        raise click.Abort()
    click.echo(
        f"processed={stats.processed} mentions={stats.stored_mentions}"
        f" duplicates={stats.duplicates} errors={stats.errors}"
        f" elapsed={stats.elapsed_seconds:.1f}s rate={stats.rate:.1f}/s"
    )
    service.close()


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
def serve(config_path: str, host: str | None, port: int | None) -> None:
    """Serve the HTTP API backed by the configured store."""
    from .api import serve as api_serve
    from .pipeline import MonitorService

    config = load_config(config_path)
    service = MonitorService(config)
    api_serve(service, host=host, port=port)


@main.command()
@click.option("--data", "data_path", required=True, type=click.Path(exists=True))
@click.option("--lang", required=True)
@click.option("--C", "c_value", type=float, default=0.1, show_default=True)
@click.option("--folds", type=int, default=10, show_default=True,
              help="cross-validation folds before the final fit (0 skips CV)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--resources-dir", default=None, type=click.Path(exists=True))
def train(data_path: str, lang: str, c_value: float, folds: int, seed: int,
          out_path: str, resources_dir: str | None) -> None:
    """Train a polarity model from a JSON-lines dataset."""
    from . import polarity

    stack = _load_stack(resources_dir)
    examples = [e for e in polarity.load_dataset(data_path) if e.lang == lang]
    if not examples:
        raise click.ClickException(f"no {lang} examples in {data_path}")
    config = polarity.TrainConfig(C=c_value, seed=seed)
    if folds > 1:
        report = polarity.cross_validate(examples, stack, k=folds, config=config)
        click.echo("acc\tfpos\tfneg\tfneu")
        click.echo(report.table_row())
    model = polarity.train(examples, stack, config)
    polarity.save_model(model, out_path)
    click.echo(f"saved {lang} model ({model.space.size} features) to {out_path}")


@main.command("eval")
@click.option("--model", "model_path", required=True, type=click.Path(exists=True))
@click.option("--data", "data_path", required=True, type=click.Path(exists=True))
@click.option("--resources-dir", default=None, type=click.Path(exists=True))
def eval_cmd(model_path: str, data_path: str, resources_dir: str | None) -> None:
    """Evaluate a saved model on a labeled dataset."""
    from . import polarity
    from .polarity.model import evaluate_model

    stack = _load_stack(resources_dir)
    model = polarity.load_model(model_path)
    examples = [e for e in polarity.load_dataset(data_path) if e.lang == model.lang]
    if not examples:
        raise click.ClickException(f"no {model.lang} examples in {data_path}")
    report = evaluate_model(model, examples, stack)
    click.echo("acc\tfpos\tfneg\tfneu")
    click.echo(report.table_row())


@main.group()
def census() -> None:
    """Regional census tooling."""


@census.command("build")
@click.option("--stream", "stream_path", required=True, type=click.Path(exists=True),
              help="JSON-lines replay file with geo fields")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True),
              help="edge list: follower<TAB>followed")
@click.option("--bbox", required=True, help="west,south,east,north")
@click.option("--manual", "manual_path", required=True, type=click.Path(exists=True),
              help="user_id<TAB>0|1 manual labels")
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--n-manual", type=int, default=10_000, show_default=True)
@click.option("--n-auto", type=int, default=20_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def census_build(stream_path: str, graph_path: str, bbox: str, manual_path: str,
                 out_path: str, n_manual: int, n_auto: int, seed: int) -> None:
    """Run the five-step census build and write user_id/provenance/score."""
    from .census import BBox, FollowGraph, build_census, load_manual_labels, save_census
    from .ingest import ReplaySource, SourceConfig

    replay = ReplaySource(SourceConfig("census-stream", "stream_replay", stream_path))
    graph = FollowGraph.load(graph_path)
    labels = load_manual_labels(manual_path)
    entries, report = build_census(
        list(replay), graph, BBox.parse(bbox), labels,
        n_manual=n_manual, n_auto=n_auto, seed=seed,
    )
    save_census(entries, out_path)
    click.echo(
        f"census: {len(entries)} users"
        f" (seeds {report.seeds_accepted}, manual {report.manual_accepted},"
        f" auto {report.auto_accepted});"
        f" classifier 4-fold accuracy {report.classifier_cv_accuracy:.3f}"
    )


if __name__ == "__main__":
    sys.exit(main())

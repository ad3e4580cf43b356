"""Command line entry points: train, run, chat, eval, bench."""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click

from .actions.pack import load_vehicle_pack
from .channel.repl import repl_channel
from .channel.server import create_app
from .channel.speech import TextPassthroughAdapter
from .channel.wake import DEFAULT_WAKE_WORD
from .data import eval_dataset_path, fixtures_dir, scripts_dir
from .dsl.lint import lint_domain
from .dsl.parser import load_domain
from .evalbench.eval import eval_intents, load_eval_dataset
from .evalbench.latency import bench_latency, load_scripts
from .evalbench.report import render_report, save_report
from .nlu.classifier import load_model, save_model, train, training_accuracy
from .runtime import build_engine

WAKE_WORD_ENV = "ASSISTANT_WAKE_WORD"


def _wake_word() -> str:
    return os.environ.get(WAKE_WORD_ENV, DEFAULT_WAKE_WORD)


def _load_spec(data: str | None):
    if data is None:
        return load_vehicle_pack()
    return load_domain(data, on_warning=lambda code, subject, msg: click.echo(f"warning: {msg}", err=True))


@click.group()
def main() -> None:
    """Voice-style in-vehicle assistant."""


@main.command("train")
@click.option("--data", type=click.Path(exists=True, file_okay=False), default=None, help="Domain directory (default: shipped pack).")
@click.option("--out", type=click.Path(dir_okay=False), default="model.bin", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def train_command(data: str | None, out: str, seed: int) -> None:
    """Parse the domain, lint it, and fit the intent classifier."""
    spec = _load_spec(data)
    for warning in lint_domain(spec):
        click.echo(f"lint: {warning.message}", err=True)
    model = train(spec, seed)
    save_model(model, out)
    accuracy = training_accuracy(model, spec)
    click.echo(f"trained {len(model.intents)} intents, {len(model.vocab)} features")
    click.echo(f"training-set accuracy: {accuracy:.4f}")
    click.echo(f"model written to {out}")


@main.command("run")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--data", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--channel", type=click.Choice(["rest", "repl"]), default="rest", show_default=True)
@click.option("--port", type=int, default=5005, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--fixtures", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--tracker-dir", type=click.Path(file_okay=False), default=None, help="Persist conversation logs here.")
@click.option("--live", is_flag=True, help="Use live provider adapters (not shipped; mocks only).")
@click.option("--console", type=click.Path(exists=True, file_okay=False), default=None, help="Serve this web console bundle at /console.")
def run_command(
    model_path: str,
    data: str | None,
    channel: str,
    port: int,
    host: str,
    fixtures: str | None,
    tracker_dir: str | None,
    live: bool,
    console: str | None,
) -> None:
    """Serve the assistant over the REST webhook or an interactive REPL."""
    if live:
        raise click.ClickException(
            "live provider adapters are not bundled; run against the deterministic mocks"
        )
    spec = _load_spec(data)
    engine = build_engine(
        spec=spec,
        model=load_model(model_path),
        fixtures=fixtures or fixtures_dir(),
        tracker_dir=tracker_dir,
    )
    if channel == "repl":
        sys.exit(repl_channel(engine, _wake_word(), speech=TextPassthroughAdapter()))
    import uvicorn

    app = create_app(engine, _wake_word(), console_dir=console)
    uvicorn.run(app, host=host, port=port, log_level="info")


@main.command("chat")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--data", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--fixtures", type=click.Path(exists=True, file_okay=False), default=None)
def chat_command(model_path: str, data: str | None, fixtures: str | None) -> None:
    """Interactive terminal chat (alias for run --channel repl)."""
    spec = _load_spec(data)
    engine = build_engine(spec=spec, model=load_model(model_path), fixtures=fixtures or fixtures_dir())
    sys.exit(repl_channel(engine, _wake_word(), speech=TextPassthroughAdapter()))


@main.command("eval")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--dataset", type=click.Path(exists=True, dir_okay=False), default=None, help="Labeled utterances (default: shipped eval set).")
@click.option("--out", "out_prefix", type=click.Path(), default="report", show_default=True, help="Writes <out>.txt and <out>.json.")
def eval_command(model_path: str, dataset: str | None, out_prefix: str) -> None:
    """Measure intent accuracy and emit the confusion matrix."""
    model = load_model(model_path)
    rows = load_eval_dataset(dataset or eval_dataset_path())
    report = eval_intents(model, rows)
    text = render_report(report)
    Path(out_prefix + ".txt").write_text(text, encoding="utf-8")
    save_report(report, out_prefix + ".json")
    click.echo(text, nl=False)
    click.echo(f"accuracy: {report.accuracy:.5f} ({report.correct_count}/{report.total_count})")


@main.command("bench")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--data", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--scripts", "scripts_path", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--fixtures", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--reps", type=int, default=100, show_default=True)
@click.option("--delays", default="0,0,0", show_default=True, help="Injected ms per action type: intent,confirmation,api.")
@click.option("--out", "out_prefix", type=click.Path(), default="report", show_default=True)
def bench_command(
    model_path: str,
    data: str | None,
    scripts_path: str | None,
    fixtures: str | None,
    reps: int,
    delays: str,
    out_prefix: str,
) -> None:
    """Run the latency methodology over the shipped conversation scripts."""
    parts = [float(p) for p in delays.split(",")]
    if len(parts) != 3:
        raise click.ClickException("--delays needs three comma-separated values")
    spec = _load_spec(data)
    engine = build_engine(spec=spec, model=load_model(model_path), fixtures=fixtures or fixtures_dir())
    scripts = load_scripts(scripts_path or scripts_dir())
    report, _samples = bench_latency(engine, scripts, reps, (parts[0], parts[1], parts[2]), _wake_word())
    text = render_report(report)
    Path(out_prefix + ".txt").write_text(text, encoding="utf-8")
    save_report(report, out_prefix + ".json")
    click.echo(text, nl=False)


if __name__ == "__main__":
    main()

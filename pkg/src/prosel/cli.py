"""Command-line surface: indexing, selection, sweeps, tree utilities.

All commands are deterministic batch operations: same inputs and flags
produce byte-identical output. Results go to standard output (JSON lines,
or CSV for sweeps), diagnostics to standard error. Exit codes: 0 success,
1 data error, 2 usage error. Set PSEL_LOG to control log verbosity.
"""

from __future__ import annotations

import json
import logging
import os
import sys
from pathlib import Path

import click

from . import corpus as corpus_mod
from . import projection, selection
from .errors import ProselError
from .similarity import SimilarityMode
from .sweep import max_drop_segment, parse_grid, sweep as run_sweep, to_csv
from .syndist import distance_vector
from .trees import parse_tree

LOG = logging.getLogger("prosel")

MODE_CHOICE = click.Choice([m.value for m in SimilarityMode])


def _setup_logging():
    level_name = os.environ.get("PSEL_LOG", "WARNING").upper()
    level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _load_corpus(corpus_path, index_path, need_projector: bool):
    if corpus_path is None and index_path is None:
        raise click.UsageError("provide --corpus or --index")
    if index_path is not None:
        corpus = corpus_mod.load_index(index_path)
    else:
        corpus = corpus_mod.ingest(corpus_path)
    if need_projector and corpus.projector is None:
        corpus.projector = projection.fit_or_degenerate(corpus)
    return corpus


def _read_json_file(path: str):
    p = Path(path)
    if not p.is_file():
        raise ProselError(f"input file not found: {p}")
    try:
        return json.loads(p.read_text("utf-8"))
    except json.JSONDecodeError as err:
        raise ProselError(f"{p.name}: invalid JSON: {err.msg}") from err


def _read_queries_jsonl(path: str) -> list[dict]:
    p = Path(path)
    if not p.is_file():
        raise ProselError(f"query file not found: {p}")
    rows = []
    for lineno, line in enumerate(p.read_text("utf-8").splitlines(), 1):
        try:
            rows.append(json.loads(line))
        except json.JSONDecodeError as err:
            raise ProselError(
                f"{p.name}:{lineno}: invalid JSON: {err.msg}"
            ) from err
    if not rows:
        raise ProselError(f"{p.name}: no queries")
    return rows


def _paragraphs_from_json(data) -> list[list[dict]]:
    if isinstance(data, list) and data and all(isinstance(x, dict) for x in data):
        return [data]
    if isinstance(data, list) and data and all(isinstance(x, list) for x in data):
        for paragraph in data:
            if not paragraph or not all(isinstance(q, dict) for q in paragraph):
                raise ProselError("each paragraph must be a non-empty array "
                                  "of query objects")
        return data
    raise ProselError(
        "paragraph file must hold an array of query objects or an array "
        "of such arrays"
    )


class _Grid(click.ParamType):
    name = "grid"

    def convert(self, value, param, ctx):
        try:
            return parse_grid(value)
        except ValueError as err:
            self.fail(str(err), param, ctx)


class _Group(click.Group):
    """Maps data errors to exit code 1 (usage errors stay exit code 2)."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ProselError as err:
            raise click.ClickException(str(err)) from err


@click.group(cls=_Group)
def cli():
    """Linguistically informed acoustic-embedding selection."""
    _setup_logging()


@cli.command("build-index")
@click.option("--corpus", "corpus_path", required=True, help="corpus JSONL file")
@click.option("--index", "index_path", required=True, help="output index path")
def build_index(corpus_path, index_path):
    """Validate a corpus, fit the acoustic projection, write the index."""
    corpus = corpus_mod.ingest(corpus_path)
    if len(corpus) >= 3:
        corpus.projector = projection.fit_or_degenerate(corpus)
    else:
        LOG.warning(
            "projector not fitted (need >= 3 records, found %d); the index "
            "will not support paragraph selection", len(corpus),
        )
    corpus_mod.save_index(corpus, index_path)
    summary = {
        "records": len(corpus),
        "d_cwe": corpus.d_cwe,
        "d_ac": corpus.d_ac,
        "projector": corpus.projector is not None,
        "index": str(index_path),
    }
    click.echo(json.dumps(summary))


@cli.command()
@click.option("--corpus", "corpus_path", default=None, help="corpus JSONL file")
@click.option("--index", "index_path", default=None, help="binary index file")
@click.option("--query", "query_path", required=True,
              help="JSONL file of query objects (corpus schema minus acoustic)")
@click.option("--mode", type=MODE_CHOICE, default="syntactic", show_default=True)
@click.option("--top-k", type=int, default=5, show_default=True)
@click.option("--out", default=None, help="write output here instead of stdout")
def select(corpus_path, index_path, query_path, mode, top_k, out):
    """Nearest-linguistic-neighbor selection, one JSON row per query."""
    corpus = _load_corpus(corpus_path, index_path, need_projector=False)
    rows = _read_queries_jsonl(query_path)
    lines = []
    for row in rows:
        repr_ = selection.repr_from_query(row)
        result = selection.select_sentence(
            corpus, repr_, SimilarityMode(mode), top_k=top_k
        )
        payload = {"query_id": row.get("id")}
        payload.update(result.to_dict())
        lines.append(json.dumps(payload))
    _emit("\n".join(lines) + "\n", out)


@cli.command("select-paragraph")
@click.option("--corpus", "corpus_path", default=None, help="corpus JSONL file")
@click.option("--index", "index_path", default=None, help="binary index file")
@click.option("--paragraph", "paragraph_path", required=True,
              help="JSON file: array of query objects")
@click.option("--mode", type=MODE_CHOICE, default="syntactic", show_default=True)
@click.option("--lsw", type=float, default=0.9, show_default=True,
              help="linguistic similarity weight in [0, 1]")
@click.option("--no-normalize-d", is_flag=True,
              help="use raw projected distances instead of corpus-diameter "
                   "normalized ones")
@click.option("--top-k", type=int, default=5, show_default=True)
@click.option("--out", default=None, help="write output here instead of stdout")
def select_paragraph(corpus_path, index_path, paragraph_path, mode, lsw,
                     no_normalize_d, top_k, out):
    """Greedy paragraph selection, one JSON row per sentence."""
    corpus = _load_corpus(corpus_path, index_path, need_projector=True)
    data = _read_json_file(paragraph_path)
    paragraphs = _paragraphs_from_json(data)
    if len(paragraphs) != 1:
        raise ProselError("select-paragraph expects exactly one paragraph; "
                          "use sweep for batches")
    rows = paragraphs[0]
    cfg = selection.SelectionConfig(
        mode=SimilarityMode(mode), lsw=lsw,
        normalize_d=not no_normalize_d, top_k=top_k,
    )
    reprs = [selection.repr_from_query(row) for row in rows]
    results = selection.select_paragraph(corpus, reprs, cfg, corpus.projector)
    lines = []
    for i, (row, result) in enumerate(zip(rows, results)):
        payload = {"index": i, "query_id": row.get("id")}
        payload.update(result.to_dict())
        lines.append(json.dumps(payload))
    _emit("\n".join(lines) + "\n", out)


@cli.command("sweep")
@click.option("--corpus", "corpus_path", default=None, help="corpus JSONL file")
@click.option("--index", "index_path", default=None, help="binary index file")
@click.option("--paragraphs", "paragraphs_path", required=True,
              help="JSON file: array of paragraphs (arrays of query objects)")
@click.option("--mode", type=MODE_CHOICE, default="syntactic", show_default=True)
@click.option("--grid", type=_Grid(), default="1.0:0.7:0.05", show_default=True,
              help="lsw grid as start:stop:step")
@click.option("--no-normalize-d", is_flag=True)
@click.option("--out", default=None, help="write CSV here instead of stdout")
@click.option("--json-out", default=None,
              help="also write points plus max-drop segment as JSON")
def sweep_command(corpus_path, index_path, paragraphs_path, mode, grid,
                  no_normalize_d, out, json_out):
    """Sweep the linguistic weight and emit trade-off curves as CSV."""
    corpus = _load_corpus(corpus_path, index_path, need_projector=True)
    paragraphs = _paragraphs_from_json(_read_json_file(paragraphs_path))
    cfg = selection.SelectionConfig(
        mode=SimilarityMode(mode), normalize_d=not no_normalize_d
    )
    reprs = [
        [selection.repr_from_query(row) for row in paragraph]
        for paragraph in paragraphs
    ]
    points = run_sweep(corpus, reprs, cfg, grid, corpus.projector)
    segment = max_drop_segment(points)
    if segment is not None:
        click.echo(
            f"max acoustic-distance drop: lsw {segment[0]} -> {segment[1]} "
            f"(drop {segment[2]!r})",
            err=True,
        )
    _emit(to_csv(points), out)
    if json_out:
        payload = {
            "points": [p.to_dict() for p in points],
            "max_drop": None if segment is None else {
                "lsw_high": segment[0],
                "lsw_low": segment[1],
                "drop": segment[2],
            },
        }
        Path(json_out).write_text(json.dumps(payload, indent=2) + "\n",
                                  encoding="utf-8")


@cli.command()
@click.argument("tree")
def distances(tree):
    """Print the syntactic distance vector of a bracketed tree."""
    vector = distance_vector(parse_tree(tree))
    click.echo(" ".join(str(v) for v in vector))


@cli.command()
@click.option("--corpus", "corpus_path", default=None, help="corpus JSONL file")
@click.option("--index", "index_path", default=None, help="binary index file")
def inspect(corpus_path, index_path):
    """Print a JSON summary of a corpus or index."""
    corpus = _load_corpus(corpus_path, index_path, need_projector=False)
    info = {
        "records": len(corpus),
        "d_cwe": corpus.d_cwe,
        "d_ac": corpus.d_ac,
        "projector": None,
        "ids_head": [r.id for r in list(corpus)[:5]],
    }
    if corpus.projector is not None:
        info["projector"] = {
            "explained_variance": [
                float(v) for v in corpus.projector.explained_variance
            ],
            "normalizer": corpus.projector.normalizer,
        }
    click.echo(json.dumps(info))


@cli.command()
@click.option("--index", "index_path", required=True, help="binary index file")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(index_path, host, port):
    """Run the HTTP selection service on a built index."""
    import uvicorn

    from .service import create_app

    app = create_app(index_path=index_path)
    uvicorn.run(app, host=host, port=port)


def main():
    cli.main(standalone_mode=True)


if __name__ == "__main__":
    main()

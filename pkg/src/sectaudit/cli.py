"""Command-line entry points.

Subcommands mirror the pipeline stages and are runnable standalone on the
previous stage's files.  All interchange is JSON Lines (UTF-8, LF); the
pipeline writes a manifest of sha256 digests so identical configs give
byte-identical artifact sets.

Exit codes: 0 success, 2 configuration error, 3 stage failure.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import __version__
from .causal import CausalRow, analyze, build_frame
from .equivcheck import SNIPPETS, differential_test
from .javasrc import SourceUnit, extract_features, parse
from .mieval import auc_roc, bootstrap_auc, build_dataset
from .miscore import (
    DEFAULT_K,
    RemoteProvider,
    score_loss,
    score_min_k,
    score_zlib,
    surrogate_train,
)
from .miscore.surrogate import DEFAULT_ALPHA, DEFAULT_ORDER
from .transform import RULE_IDS, apply_rule, get_rule

EXIT_CONFIG = 2
EXIT_STAGE = 3


class ConfigError(Exception):
    pass


class StageError(Exception):
    def __init__(self, stage, message):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


def _jobs_default():
    raw = os.environ.get("SECT_AUDIT_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def load_pool(directory):
    path = Path(directory)
    if not path.is_dir():
        raise ConfigError(f"not a directory: {directory}")
    units = [SourceUnit(p.stem, str(p), p.read_text(encoding="utf-8"))
             for p in sorted(path.glob("*.java"))]
    if not units:
        raise ConfigError(f"no .java files under {directory}")
    return units


def parse_rule_arg(value):
    if value.upper() == "ALL":
        return list(RULE_IDS)
    try:
        rid = int(value)
        get_rule(rid)
    except (ValueError, KeyError):
        raise ConfigError(f"bad rule selector {value!r} (1-23 or ALL)")
    return [rid]


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")


def read_jsonl(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def write_json(path, obj):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(obj, ensure_ascii=False, indent=2) + "\n")


def sha256_file(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


@click.group()
def main():
    """Code-transformation and membership-inference audit toolkit."""


def _run(func):
    try:
        func()
    except ConfigError as e:
        click.echo(f"config error: {e}", err=True)
        sys.exit(EXIT_CONFIG)
    except StageError as e:
        click.echo(f"stage failure: {e}", err=True)
        sys.exit(EXIT_STAGE)


@main.command("transform")
@click.option("--in", "in_dir", required=True)
@click.option("--out", "out_dir", required=True)
@click.option("--rule", default="ALL", show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--jobs", type=int, default=None)
def cmd_transform(in_dir, out_dir, rule, seed, jobs):
    """Rewrite every file under --in, writing results and a log to --out."""
    def go():
        rules = parse_rule_arg(rule)
        units = load_pool(in_dir)
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        n_jobs = jobs or _jobs_default()

        def one(unit):
            tree = parse(unit.text)
            text = unit.text
            entries = []
            for rid in rules:
                try:
                    outcome = apply_rule(tree, rid, seed=seed)
                except Exception as e:
                    raise StageError("transform", f"{unit.id} rule {rid}: {e}")
                entries.append({"id": unit.id, "rule_id": rid,
                                "applied": outcome.applied,
                                "site_count": outcome.site_count})
                if outcome.applied:
                    text = outcome.text
                    tree = parse(text)
            return unit, text, entries

        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(one, units))
        log = []
        for unit, text, entries in results:
            (out / f"{unit.id}.java").write_text(text, encoding="utf-8")
            log.extend(entries)
        write_jsonl(out / "transform_log.jsonl", log)
        click.echo(f"transformed {len(units)} files with rules {rules}")
    _run(go)


@main.command("features")
@click.option("--in", "in_dir", required=True)
@click.option("--out", "out_file", required=True)
def cmd_features(in_dir, out_file):
    """Static code features per file, one JSON object per line."""
    def go():
        rows = []
        for unit in load_pool(in_dir):
            feats = extract_features(parse(unit.text))
            rows.append({"id": unit.id, **feats.as_dict()})
        write_jsonl(out_file, rows)
        click.echo(f"wrote features for {len(rows)} files")
    _run(go)


@main.command("equivcheck")
@click.option("--rule", default="ALL", show_default=True)
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--step-limit", type=int, default=10_000, show_default=True)
@click.option("--out", "out_file", default=None)
def cmd_equivcheck(rule, trials, seed, step_limit, out_file):
    """Differential-test the bundled snippet suite."""
    def go():
        rules = parse_rule_arg(rule)
        rows = []
        mismatched = 0
        for rid in rules:
            for si, src in enumerate(SNIPPETS[rid]):
                rep = differential_test(src, rid, trials=trials, seed=seed,
                                        step_limit=step_limit)
                rows.append({"rule_id": rid, "snippet": si,
                             "applied": rep.applied, "matches": rep.matches,
                             "mismatches": rep.mismatches,
                             "skipped": rep.skipped})
                mismatched += rep.mismatches
        if out_file:
            write_jsonl(out_file, rows)
        click.echo(f"{len(rows)} snippet runs, {mismatched} mismatches")
        if mismatched:
            raise StageError("equivcheck", f"{mismatched} behavioral mismatches")
    _run(go)


@main.command("dataset")
@click.option("--train", "train_dir", required=True)
@click.option("--test", "test_dir", required=True)
@click.option("--rule", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_file", required=True)
def cmd_dataset(train_dir, test_dir, rule, seed, out_file):
    """Sample members/non-members for one rule into a JSONL file."""
    def go():
        train = load_pool(train_dir)
        test = load_pool(test_dir)
        try:
            ds = build_dataset(train, test, rule, seed)
        except ValueError as e:
            raise StageError("dataset", str(e))
        rows = [{"id": u.id, "is_member": True, "text": u.text}
                for u in ds.members]
        rows += [{"id": u.id, "is_member": False, "text": u.text}
                 for u in ds.nonmembers]
        write_jsonl(out_file, rows)
        click.echo(f"rule {rule}: {len(ds.members)} members, "
                   f"{len(ds.nonmembers)} nonmembers")
    _run(go)


def _provider_from_options(provider, dataset_rows, model_dir, endpoint,
                           order, alpha):
    if provider == "surrogate":
        if model_dir:
            corpus = [u.text for u in load_pool(model_dir)]
        else:
            corpus = [r["text"] for r in dataset_rows if r["is_member"]]
        if not corpus:
            raise ConfigError("surrogate training corpus is empty")
        return surrogate_train(corpus, order=order, alpha=alpha)
    if provider == "remote":
        if not endpoint:
            raise ConfigError("--endpoint is required with --provider remote")
        return RemoteProvider(endpoint)
    raise ConfigError(f"unknown provider {provider!r}")


def score_rows(provider, dataset_rows, k):
    """LOSS/MIN_K/ZLIB rows for every dataset sample, stable order."""
    out = []
    for r in dataset_rows:
        profile = provider.profile(r["text"], r["id"])
        for score in (score_loss(profile),
                      score_min_k(profile, k),
                      score_zlib(profile, r["text"])):
            out.append({"id": r["id"], "method": score.method,
                        "value": score.value, "is_member": r["is_member"]})
    return out


@main.command("score")
@click.option("--dataset", "dataset_file", required=True)
@click.option("--provider", default="surrogate", show_default=True)
@click.option("--model-dir", default=None,
              help="Train the surrogate on this directory instead of the "
                   "dataset's member texts.")
@click.option("--endpoint", default=None)
@click.option("--order", type=int, default=DEFAULT_ORDER, show_default=True)
@click.option("--alpha", type=float, default=DEFAULT_ALPHA, show_default=True)
@click.option("--k", type=float, default=DEFAULT_K, show_default=True)
@click.option("--out", "out_file", required=True)
def cmd_score(dataset_file, provider, model_dir, endpoint, order, alpha, k,
              out_file):
    """Score every dataset sample with LOSS, MIN_K and ZLIB."""
    def go():
        if not Path(dataset_file).is_file():
            raise ConfigError(f"no such file: {dataset_file}")
        rows = read_jsonl(dataset_file)
        prov = _provider_from_options(provider, rows, model_dir, endpoint,
                                      order, alpha)
        try:
            scored = score_rows(prov, rows, k)
        except Exception as e:
            raise StageError("score", str(e))
        write_jsonl(out_file, scored)
        click.echo(f"scored {len(rows)} samples x 3 methods")
    _run(go)


@main.command("evaluate")
@click.option("--scores", "scores_file", required=True)
@click.option("--method", default="LOSS", show_default=True)
@click.option("--bootstrap", "n_boot", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_file", required=True)
def cmd_evaluate(scores_file, method, n_boot, seed, out_file):
    """AUC-ROC with bootstrap CI for one scoring method."""
    def go():
        if not Path(scores_file).is_file():
            raise ConfigError(f"no such file: {scores_file}")
        rows = [r for r in read_jsonl(scores_file) if r["method"] == method]
        if not rows:
            raise StageError("evaluate", f"no rows for method {method}")
        pairs = [(r["value"], r["is_member"]) for r in rows]
        try:
            result = bootstrap_auc(pairs, n_boot=n_boot, seed=seed)
        except ValueError as e:
            raise StageError("evaluate", str(e))
        n_member = sum(1 for _, m in pairs if m)
        write_json(out_file, {
            "method": method,
            "auc": result.auc,
            "bootstrap_mean": result.bootstrap_mean,
            "ci": [result.ci_low, result.ci_high],
            "n_member": n_member,
            "n_nonmember": len(pairs) - n_member,
            "seed": seed,
        })
        click.echo(f"{method}: auc {result.auc:.4f} "
                   f"[{result.ci_low:.4f}, {result.ci_high:.4f}]")
    _run(go)


def _frame_from_rows(rows):
    frame = []
    for r in rows:
        frame.append(CausalRow(r["unit_id"], r["t"], dict(r["y"]), dict(r["z"])))
    return frame


def _report_as_dict(report):
    outcomes = {}
    for name, block in report.outcomes.items():
        outcomes[name] = {
            "p": block["pearson"],
            "ate": block["ate"],
            "kept_confounders": block["kept"],
            "dropped_confounders": block["dropped"],
            "refutations": {
                m: {"new_value": ref.new_value, "passed": ref.passed}
                for m, ref in block["refutations"].items()
            },
        }
    return {"rule_id": report.rule_id, "estimator": report.estimator,
            "outcomes": outcomes}


@main.command("causal")
@click.option("--frame", "frame_file", required=True)
@click.option("--rule", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_file", required=True)
def cmd_causal(frame_file, rule, seed, out_file):
    """Estimate the rule's treatment effect from a causal frame file."""
    def go():
        if not Path(frame_file).is_file():
            raise ConfigError(f"no such file: {frame_file}")
        frame = _frame_from_rows(read_jsonl(frame_file))
        try:
            report = analyze(frame, rule, seed=seed)
        except ValueError as e:
            raise StageError("causal", str(e))
        write_json(out_file, _report_as_dict(report))
        for name, block in report.outcomes.items():
            click.echo(f"{name}: ate {block['ate']:+.4f} "
                       f"p {block['pearson']:+.4f}")
    _run(go)


def _causal_frame(ds, scores_by_arm, features):
    """One row per (sample, arm): T=0 scored against the original-trained
    model, T=1 against the transformed-trained model; outcomes are then
    relative-scored within each arm."""
    rows = []
    for t, scored in scores_by_arm.items():
        by_id = {}
        for r in scored:
            by_id.setdefault(r["id"], {})[r["method"]] = r["value"]
        for sid in sorted(by_id):
            rows.append(CausalRow(sid, t, by_id[sid], features[sid]))
    return build_frame(rows)


@main.command("pipeline")
@click.option("--train", "train_dir", required=True)
@click.option("--test", "test_dir", required=True)
@click.option("--rule", type=int, default=1, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--order", type=int, default=DEFAULT_ORDER, show_default=True)
@click.option("--alpha", type=float, default=DEFAULT_ALPHA, show_default=True)
@click.option("--k", type=float, default=DEFAULT_K, show_default=True)
@click.option("--bootstrap", "n_boot", type=int, default=1000, show_default=True)
@click.option("--out", "out_dir", required=True)
def cmd_pipeline(train_dir, test_dir, rule, seed, order, alpha, k, n_boot,
                 out_dir):
    """Full run: dataset, two victim models, scores, AUC reports, causal
    report, and a digest manifest."""
    def go():
        get_rule(rule)
        train = load_pool(train_dir)
        test = load_pool(test_dir)
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)

        try:
            ds = build_dataset(train, test, rule, seed)
        except ValueError as e:
            raise StageError("dataset", str(e))
        dataset_rows = [{"id": u.id, "is_member": True, "text": u.text}
                        for u in ds.members]
        dataset_rows += [{"id": u.id, "is_member": False, "text": u.text}
                         for u in ds.nonmembers]
        write_jsonl(out / "dataset.jsonl", dataset_rows)

        # victim corpora: full member sources, original vs transformed
        by_id = {u.id: u for u in train}
        originals = [by_id[u.id].text for u in ds.members]
        try:
            transformed = [apply_rule(parse(t), rule, seed=seed).text
                           for t in originals]
        except Exception as e:
            raise StageError("transform", str(e))
        victims = {
            0: surrogate_train(originals, order=order, alpha=alpha),
            1: surrogate_train(transformed, order=order, alpha=alpha),
        }

        scores_by_arm = {}
        for arm, model in victims.items():
            try:
                scored = score_rows(model, dataset_rows, k)
            except Exception as e:
                raise StageError("score", str(e))
            tag = "orig" if arm == 0 else "trans"
            write_jsonl(out / f"scores_{tag}.jsonl", scored)
            scores_by_arm[arm] = scored

        reports = {}
        for arm, scored in scores_by_arm.items():
            tag = "orig" if arm == 0 else "trans"
            for method in ("LOSS", "MIN_K", "ZLIB"):
                pairs = [(r["value"], r["is_member"]) for r in scored
                         if r["method"] == method]
                result = bootstrap_auc(pairs, n_boot=n_boot, seed=seed)
                reports[f"{tag}_{method}"] = {
                    "method": method,
                    "auc": result.auc,
                    "bootstrap_mean": result.bootstrap_mean,
                    "ci": [result.ci_low, result.ci_high],
                    "n_member": len(ds.members),
                    "n_nonmember": len(ds.nonmembers),
                    "seed": seed,
                }
        write_json(out / "auc_reports.json", reports)

        features = {}
        for r in dataset_rows:
            feats = extract_features(parse(r["text"]))
            features[r["id"]] = feats.as_dict()
        frame = _causal_frame(ds, scores_by_arm, features)
        write_jsonl(out / "causal_frame.jsonl",
                    [{"unit_id": row.unit_id, "t": row.t, "y": row.y,
                      "z": row.z} for row in frame])
        try:
            report = analyze(frame, rule, seed=seed)
        except ValueError as e:
            raise StageError("causal", str(e))
        write_json(out / "ate_report.json", _report_as_dict(report))

        artifact_names = ["dataset.jsonl", "scores_orig.jsonl",
                          "scores_trans.jsonl", "auc_reports.json",
                          "causal_frame.jsonl", "ate_report.json"]
        manifest = {
            "version": __version__,
            "config": {"rule": rule, "seed": seed, "order": order,
                       "alpha": alpha, "k": k, "bootstrap": n_boot,
                       "train": str(train_dir), "test": str(test_dir)},
            "artifacts": {name: sha256_file(out / name)
                          for name in artifact_names},
        }
        write_json(out / "manifest.json", manifest)
        click.echo(f"pipeline complete: {out / 'manifest.json'}")
    _run(go)


if __name__ == "__main__":
    main()

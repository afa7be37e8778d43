"""
Command-line entry point.

Usage:
    tonalmath freq A2 --model paper
    tonalmath table1 --tonic D2 --format csv
    tonalmath triads --root D2 --horizon 2.6
    tonalmath scales --large-step-rule off
    tonalmath scales --mode-of Ionian 3
    tonalmath plot --tonic D2 --notes G2,Bb2 --window 0..0.25 > fig.svg
    tonalmath harmony --tonic D --other F#

Exit status is 0 on success, 2 on usage errors and 1 on computation errors.
"""

from __future__ import annotations

import functools
import itertools
import sys

import click

from . import coincidence as co
from . import consonance as cs
from . import scales as sc
from .errors import NoteParseError, NoteRangeError, TonalError
from .pitch import (PAPER_MODEL, equal_temperament_frequency, model_deviation, model_frequency, name_of,
                    parse_note, parse_pitch_class, pitch_class_name, table_frequency)
from .report import Report
from .svg import wave_plot

REFERENCE_ROOT = "D2"

TIME = ".4f"
FREQ = ".3f"

FORMATS = ("table", "csv", "json")


def _format_option(choices=FORMATS, default="table"):
    return click.option("--format", "fmt", type=click.Choice(choices), default=default, show_default=True,
                        help="Output format.")


def _output_option(f):
    return click.option("-o", "--output", type=click.File("w", encoding="utf-8", lazy=True), default="-",
                        help="Write to a file instead of stdout.")(f)


def _note(value, extended=False):
    try:
        return parse_note(value, extended)
    except (NoteParseError, NoteRangeError) as exc:
        raise click.BadParameter(str(exc)) from None


def _pitch_class(value):
    try:
        return parse_pitch_class(value)
    except NoteParseError as exc:
        raise click.BadParameter(str(exc)) from None


def computation(f):
    """Map library errors raised while computing to exit status 1."""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except TonalError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
    return wrapper


def _emit(out, report: Report, fmt: str):
    out.write(report.render(fmt))


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Note frequencies, sine-coincidence consonance and symmetric scales."""


@main.command()
@click.argument("notes", nargs=-1, required=True)
@click.option("--model", type=click.Choice(["paper", "equal", "both"]), default="both", show_default=True)
@click.option("--extended", is_flag=True, help="Allow indices beyond the 88 piano keys.")
@_format_option()
@_output_option
@computation
def freq(notes, model, extended, fmt, output):
    """Frequency of each NOTE (name like A4 / Bb2, or key index 1..88)."""
    columns = ["note", "index"]
    if model in ("equal", "both"):
        columns += ["equal_hz", "table_hz"]
    if model in ("paper", "both"):
        columns += ["paper_hz"]
    if model == "both":
        columns += ["deviation"]
    rows = []
    for text in notes:
        y = _note(text, extended)
        row = {"note": str(name_of(y, extended)), "index": y}
        if "equal_hz" in columns:
            row["equal_hz"] = equal_temperament_frequency(y, extended)
            row["table_hz"] = table_frequency(y, extended)
        if "paper_hz" in columns:
            row["paper_hz"] = model_frequency(PAPER_MODEL, y, extended)
        if model == "both":
            row["deviation"] = model_deviation(PAPER_MODEL, y, extended)
        rows.append(row)
    report = Report("freq", {"notes": list(notes), "model": model, "c": PAPER_MODEL.c, "k": PAPER_MODEL.k},
                    columns, rows, {"equal_hz": FREQ, "table_hz": ".2f", "paper_hz": FREQ, "deviation": ".6g"})
    _emit(output, report, fmt)


def table1_report(tonic="D2", delta=co.DEFAULT_DELTA, horizon=co.DEFAULT_HORIZON, count=10,
                  include_tonic=False, warn=None) -> Report:
    y0 = parse_note(tonic)
    f0 = table_frequency(y0)
    roles = list(co.CHROMATIC_ROLES)
    if include_tonic:
        roles.insert(0, (0, "Tonic"))
    columns = ["interval_name", "semitones"] + [f"t{i}" for i in range(1, count + 1)]
    rows = []
    for semitones, role in roles:
        analysis = co.detect_coincidences(f0, table_frequency(y0 + semitones), delta, horizon)
        times = [round(float(t), 4) for t in analysis.times[:count]]
        if len(times) < count and warn is not None:
            warn(f"warning: {role} has only {len(times)} events within {horizon} s; row padded")
        times += [None] * (count - len(times))
        rows.append({"interval_name": role, "semitones": semitones,
                     **{f"t{i}": t for i, t in enumerate(times, 1)}})
    params = {"tonic": str(name_of(y0)), "tonic_hz": f0, "delta": delta, "horizon": horizon, "count": count}
    return Report("table1", params, columns, rows, {c: TIME for c in columns[2:]})


@main.command()
@click.option("--tonic", default=REFERENCE_ROOT, show_default=True)
@click.option("--delta", type=float, default=co.DEFAULT_DELTA, show_default=True,
              help="Pairing tolerance for rising zeros (s).")
@click.option("--horizon", type=float, default=co.DEFAULT_HORIZON, show_default=True)
@click.option("--count", type=click.IntRange(1), default=10, show_default=True, help="Event times per row.")
@click.option("--include-tonic", is_flag=True, help="Add the tonic-vs-tonic diagnostic row.")
@_format_option()
@_output_option
@computation
def table1(tonic, delta, horizon, count, include_tonic, fmt, output):
    """Coincidence times of the tonic with each chromatic interval."""
    _note(tonic)
    report = table1_report(tonic, delta, horizon, count, include_tonic,
                           warn=lambda msg: click.echo(msg, err=True))
    _emit(output, report, fmt)


def triads_report(root=REFERENCE_ROOT, qualities=None, rank=True, delta=co.DEFAULT_DELTA,
                  agreement=cs.DEFAULT_AGREEMENT, horizon=co.DEFAULT_HORIZON) -> Report:
    if qualities is None:
        qualities = list(cs.TRIAD_QUALITIES)
    if rank:
        reports = cs.rank_triads(root, qualities, delta, agreement, horizon)
    else:
        reports = [cs.triad_sync_time(root, q, delta, agreement, horizon) for q in qualities]
    columns = ["rank", "quality", "offsets", "sync_time", "event1_time", "event2_time",
               "root_hz", "upper1_hz", "upper2_hz"]
    rows = []
    for i, r in enumerate(reports, 1):
        e1, e2 = r.events if r.events else (None, None)
        rows.append({
            "rank": i if rank else None,
            "quality": r.name,
            "offsets": "+".join(map(str, r.quality.offsets)),
            "sync_time": r.sync_time,
            "event1_time": e1.time if e1 else None,
            "event2_time": e2.time if e2 else None,
            "root_hz": r.frequencies[0],
            "upper1_hz": r.frequencies[1],
            "upper2_hz": r.frequencies[2],
        })
    params = {"root": str(root), "delta": delta, "agreement": agreement, "horizon": horizon,
              "qualities": list(qualities), "rank": rank}
    fmts = {c: TIME for c in ("sync_time", "event1_time", "event2_time")}
    fmts.update({c: FREQ for c in ("root_hz", "upper1_hz", "upper2_hz")})
    return Report("triads", params, columns, rows, fmts)


@main.command()
@click.option("--root", default=REFERENCE_ROOT, show_default=True)
@click.option("--qualities", default=",".join(cs.TRIAD_QUALITIES), show_default=True,
              help="Comma-separated triad qualities.")
@click.option("--rank/--no-rank", default=True, show_default=True)
@click.option("--delta", type=float, default=co.DEFAULT_DELTA, show_default=True)
@click.option("--agreement", type=float, default=cs.DEFAULT_AGREEMENT, show_default=True)
@click.option("--horizon", type=float, default=co.DEFAULT_HORIZON, show_default=True)
@click.option("--scale-tolerances", is_flag=True,
              help="Scale delta, agreement and horizon by the ratio of D2 to the root frequency.")
@_format_option()
@_output_option
@computation
def triads(root, qualities, rank, delta, agreement, horizon, scale_tolerances, fmt, output):
    """Triads ranked by the time their notes first sync with the root."""
    y = _note(root)
    names = [q.strip() for q in qualities.split(",") if q.strip()]
    unknown = [q for q in names if q not in cs.TRIAD_QUALITIES]
    if unknown:
        raise click.BadParameter(f"unknown qualities: {', '.join(unknown)}", param_hint="--qualities")
    if scale_tolerances:
        factor = table_frequency(parse_note(REFERENCE_ROOT)) / table_frequency(y)
        delta, agreement, horizon = delta * factor, agreement * factor, horizon * factor
    _emit(output, triads_report(root, names, rank, delta, agreement, horizon), fmt)


@main.command()
@click.option("--large-step-rule", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--link", type=int, default=2, show_default=True, help="Whole-tone link between segments.")
@click.option("--mode-of", nargs=2, type=(str, click.IntRange(1, 7)), default=None,
              help="Rotate a named or stepped pattern to a degree, e.g. --mode-of Ionian 3.")
@_format_option()
@_output_option
@computation
def scales(large_step_rule, link, mode_of, fmt, output):
    """Enumerate segment-symmetric heptatonic scales."""
    if mode_of:
        source, degree = mode_of
        pattern = sc.IntervalPattern.parse(source)
        rotated = sc.mode_rotation(pattern, degree)
        rows = [{"source": str(pattern), "source_name": sc.name_of_pattern(pattern), "degree": degree,
                 "pattern": str(rotated), "name": sc.name_of_pattern(rotated)}]
        report = Report("scales", {"mode_of": [source, degree]}, list(rows[0]), rows)
    else:
        constraint = sc.SegmentConstraint(link_step=link, large_step_rule=large_step_rule == "on")
        rows = [{"pattern": str(p), "name": sc.name_of_pattern(p)}
                for p in sc.enumerate_symmetric_scales(constraint)]
        report = Report("scales", {"large_step_rule": large_step_rule, "link": link},
                        ["pattern", "name"], rows)
    _emit(output, report, fmt)


def _parse_window(text):
    try:
        lo, hi = (float(v) for v in text.split(".."))
    except ValueError:
        raise click.BadParameter(f"expected START..END, got {text!r}", param_hint="--window") from None
    if hi <= lo:
        raise click.BadParameter("window end must be after its start", param_hint="--window")
    return lo, hi


def plot_markers(tonic_hz, note_hz, window, delta=co.DEFAULT_DELTA, agreement=cs.DEFAULT_AGREEMENT):
    """Marker list ``(time, kind)`` for a tonic and up to two other notes."""
    lo, hi = window
    if not note_hz:
        return [(float(t), "zero") for t in co.rising_zeros(tonic_hz, hi) if t >= lo]
    analyses = [co.detect_coincidences(tonic_hz, f, delta, hi) for f in note_hz]
    markers = set()
    for a in analyses:
        markers.update((e.time, "event") for e in a.events if e.time >= lo)
    for a, b in itertools.combinations(analyses, 2):
        markers.update((t, "shared") for t in cs.shared_event_times(a, b, agreement) if t >= lo)
    return sorted(markers)


@main.command()
@click.option("--tonic", default=REFERENCE_ROOT, show_default=True)
@click.option("--notes", default="", help="Comma-separated notes plotted against the tonic (at most 2).")
@click.option("--window", default="0..0.25", show_default=True, help="Time window START..END in seconds.")
@click.option("--delta", type=float, default=co.DEFAULT_DELTA, show_default=True)
@click.option("--agreement", type=float, default=cs.DEFAULT_AGREEMENT, show_default=True)
@_format_option(("svg", "json", "csv"), default="svg")
@_output_option
@computation
def plot(tonic, notes, window, delta, agreement, fmt, output):
    """Overlay the tonic and other notes as sine waves, marking coincidences."""
    lo, hi = _parse_window(window)
    y0 = _note(tonic)
    others = [_note(n.strip()) for n in notes.split(",") if n.strip()]
    if len(others) > 2:
        raise click.BadParameter("at most 3 notes including the tonic", param_hint="--notes")
    traces = [(str(name_of(y)), table_frequency(y)) for y in [y0] + others]
    markers = plot_markers(traces[0][1], [f for _, f in traces[1:]], (lo, hi), delta, agreement)
    if fmt == "svg":
        title = " / ".join(label for label, _ in traces) + f", {lo:g}..{hi:g} s"
        output.write(wave_plot(traces, (lo, hi), markers, title=title))
        return
    rows = [{"time": t, "kind": kind} for t, kind in markers]
    params = {"tonic": traces[0][0], "notes": [label for label, _ in traces[1:]], "window": [lo, hi],
              "delta": delta, "agreement": agreement}
    _emit(output, Report("plot", params, ["time", "kind"], rows, {"time": TIME}), fmt)


def _ordered_names(pcs, start):
    return " ".join(pitch_class_name(start + i) for i in range(12) if pitch_class_name(start + i) in pcs)


@main.command()
@click.option("--tonic", default="D", show_default=True)
@click.option("--other", required=True, help="Pitch class the harmonizer starts from.")
@_format_option()
@_output_option
@computation
def harmony(tonic, other, fmt, output):
    """Common notes between two major scales and the harmonizer's mode."""
    t, o = _pitch_class(tonic), _pitch_class(other)
    a, b = sc.major_scale_set(t), sc.major_scale_set(o)
    mode = sc.harmonizer_mode(t, o)
    row = {
        "tonic": pitch_class_name(t),
        "other": pitch_class_name(o),
        "tonic_scale": _ordered_names(a, t),
        "other_scale": _ordered_names(b, o),
        "common": _ordered_names(a & b, t),
        "count": len(a & b),
        "degree": mode[0] if mode else None,
        "mode": mode[2] if mode else None,
    }
    _emit(output, Report("harmony", {"tonic": row["tonic"], "other": row["other"]}, list(row), [row]), fmt)


if __name__ == "__main__":
    main()

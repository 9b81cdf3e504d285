"""CSV / JSON / human renderings of scan output."""
import io
from pathlib import Path
from typing import IO, List, Optional, Sequence, Tuple, Union

import pandas as pd
from loguru import logger

from src.scanner.scan import ScanRecord, ScanResult, TableRow

CSV_COLUMNS = [
    "d",
    "p",
    "verdict",
    "fibonacci_wieferich",
    "wieferich_unit",
    "period_equal",
    "williams_nonzero",
    "excluded_reasons",
    "elapsed_ns",
]
_OPTIONAL_FLAGS = ["fibonacci_wieferich", "wieferich_unit", "period_equal", "williams_nonzero"]


def records_frame(records: Sequence[ScanRecord]) -> pd.DataFrame:
    rows = []
    for r in records:
        row = r.model_dump(mode="json")
        row["excluded_reasons"] = ";".join(row["excluded_reasons"])
        rows.append(row)
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def to_csv(records: Sequence[ScanRecord]) -> str:
    return records_frame(records).to_csv(index=False)


def to_json(records: Sequence[ScanRecord]) -> str:
    frame = pd.DataFrame([r.model_dump(mode="json") for r in records], columns=CSV_COLUMNS)
    return frame.to_json(orient="records", indent=2)


def _flag(cell: str) -> Optional[bool]:
    if cell == "":
        return None
    if cell in ("True", "False"):
        return cell == "True"
    raise ValueError(f"unexpected boolean cell {cell!r}")


def read_csv_records(source: Union[str, Path, IO[str]]) -> List[ScanRecord]:
    """Parse CSV written by `to_csv` back into ScanRecords."""
    frame = pd.read_csv(source, dtype=str, keep_default_na=False)
    missing = set(CSV_COLUMNS) - set(frame.columns)
    if missing:
        raise ValueError(f"CSV is missing columns: {sorted(missing)}")

    records = []
    for row in frame.to_dict(orient="records"):
        reasons = row["excluded_reasons"]
        records.append(
            ScanRecord(
                d=int(row["d"]),
                p=int(row["p"]),
                verdict=row["verdict"],
                excluded_reasons=reasons.split(";") if reasons else [],
                elapsed_ns=int(row["elapsed_ns"]),
                **{name: _flag(row[name]) for name in _OPTIONAL_FLAGS},
            )
        )
    return records


def _join(primes: Sequence[int]) -> str:
    return ", ".join(str(p) for p in primes) if primes else "(none)"


def render_scan(result: ScanResult) -> str:
    config = result.config
    out = io.StringIO()
    for d in config.discriminants:
        exceptional = [r.p for r in result.exceptional if r.d == d]
        out.write(f"d = {d}, primes in [{config.p_lo}, {config.bound}]\n")
        out.write(f"  not p-rational: {_join(exceptional)}\n")
        excluded = [r for r in result.excluded if r.d == d]
        if excluded:
            out.write("  excluded:\n")
            for r in excluded:
                out.write(f"    {r.p}: {', '.join(e.value for e in r.excluded_reasons)}\n")
    return out.getvalue()


def render_table(rows: Sequence[TableRow], bound: int) -> str:
    header = ("Discriminant", f"Primes<{bound}", "Published", "Match")
    body = []
    for row in rows:
        published = "-" if row.published is None else _join(row.published)
        match = "-" if row.match is None else ("yes" if row.match else "NO")
        body.append((str(row.d), _join(row.primes), published, match))

    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = [" | ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in [header, *body]]
    lines.insert(1, "-+-".join("-" * w for w in widths))

    excluded = [(row.d, p) for row in rows for p in row.excluded]
    if excluded:
        lines.append("")
        lines.append("Excluded: " + ", ".join(f"(d={d}, p={p})" for d, p in excluded))
    return "\n".join(lines) + "\n"


def render_multi(rows: Sequence[Tuple[int, List[int]]], published: Optional[Sequence[int]] = None) -> str:
    if not rows:
        lines = ["(none)"]
    else:
        lines = [f"{p} | {', '.join(str(d) for d in ds)}" for p, ds in rows]
    if published is not None:
        extra = sorted({p for p, _ in rows} - set(published))
        lines.append("")
        lines.append("subset of published exceptions: " + ("yes" if not extra else f"NO, extra {extra}"))
    return "\n".join(lines) + "\n"


def emit(text: str, path: Optional[str]) -> None:
    """Write to `path` when given, else to stdout."""
    if path:
        Path(path).write_text(text, encoding="utf-8")
        logger.info("Wrote {}", path)
    else:
        print(text, end="")


def format_records(result: ScanResult, output_format: str) -> str:
    records = sorted(result.exceptional + result.excluded, key=lambda r: (r.d, r.p))
    if output_format == "csv":
        return to_csv(records)
    if output_format == "json":
        return to_json(records)
    return render_scan(result)

"""CSV, JSON and SVG artifacts.

CSV rows are ``n,t,re_v,im_v,abs_v`` with 17 significant digits, a header
row and LF endings, ordered by time and then by site. Reading and writing
again reproduces the file byte for byte.
"""

import csv
import io
import json
import math

import numpy as np

from .dynamics import LatticeGrid
from .errors import ValidationError

HEADER = ("n", "t", "re_v", "im_v", "abs_v")


def _fmt(x):
    return format(float(x), ".17g")


def grid_to_csv(grid):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for i, t in enumerate(grid.ts):
        ts = _fmt(t)
        for j, n in enumerate(grid.ns):
            v = grid.values[i, j]
            w.writerow((int(n), ts, _fmt(v.real), _fmt(v.imag), _fmt(abs(v))))
    return buf.getvalue()


def write_csv(grid, path):
    with open(path, "w", newline="", encoding="ascii") as fh:
        fh.write(grid_to_csv(grid))


def csv_to_grid(text, source=None):
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("empty CSV", field="csv") from None
    if tuple(h.strip() for h in header) != HEADER:
        raise ValidationError(f"header must be {','.join(HEADER)}", field="csv.header")
    rows = []
    for k, row in enumerate(reader, start=2):
        if len(row) != 5:
            raise ValidationError("expected 5 columns", field=f"csv.line{k}")
        try:
            n = int(row[0])
            t, re, im = float(row[1]), float(row[2]), float(row[3])
        except ValueError as exc:
            raise ValidationError(str(exc), field=f"csv.line{k}") from None
        rows.append((n, t, complex(re, im)))
    if not rows:
        raise ValidationError("no data rows", field="csv")
    ns = sorted({r[0] for r in rows})
    ts = list(dict.fromkeys(r[1] for r in rows))
    if len(rows) != len(ns) * len(ts):
        raise ValidationError("rows do not form a full (t, n) grid", field="csv")
    n_index = {n: j for j, n in enumerate(ns)}
    t_index = {t: i for i, t in enumerate(ts)}
    values = np.full((len(ts), len(ns)), np.nan, dtype=complex)
    for n, t, v in rows:
        values[t_index[t], n_index[n]] = v
    if np.any(np.isnan(values)):
        raise ValidationError("duplicate or missing (t, n) rows", field="csv")
    return LatticeGrid(np.array(ns), np.array(ts), values, dict(source or {}))


def read_csv(path, source=None):
    with open(path, encoding="ascii") as fh:
        return csv_to_grid(fh.read(), source)


def write_json(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, default=_json_default)
        fh.write("\n")


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default)


def _json_default(x):
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"not JSON serializable: {type(x).__name__}")


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}", field=str(path)) from None


# SVG heatmap

# viridis-like anchors, linearly interpolated into the 256-entry table
_ANCHORS = (
    (0.000, (68, 1, 84)), (0.125, (71, 44, 122)), (0.250, (59, 81, 139)),
    (0.375, (44, 113, 142)), (0.500, (33, 144, 141)), (0.625, (39, 173, 129)),
    (0.750, (92, 200, 99)), (0.875, (170, 220, 50)), (1.000, (253, 231, 37)),
)


def _palette():
    xs = np.array([a[0] for a in _ANCHORS])
    cs = np.array([a[1] for a in _ANCHORS], dtype=float)
    q = np.linspace(0, 1, 256)
    rgb = np.stack([np.interp(q, xs, cs[:, k]) for k in range(3)], axis=1)
    return tuple("#%02x%02x%02x" % tuple(int(round(c)) for c in row) for row in rgb)


PALETTE = _palette()


def grid_to_svg(grid, title="|v|", cell=4):
    """|v| heatmap with a linear colour scale; n runs across, t upward."""
    amp = np.abs(grid.values)
    lo, hi = float(amp.min()), float(amp.max())
    span = hi - lo if hi > lo else 1.0
    idx = np.clip(((amp - lo) / span * 255).round().astype(int), 0, 255)
    nt, nn = amp.shape
    ch = max(1, min(cell, 600 // max(nt, 1))) if nt > 150 else cell
    left, top, bar = 60, 30, 30
    W, H = left + nn * cell + bar + 70, top + nt * ch + 50
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
           f'font-family="sans-serif" font-size="12">',
           f'<text x="{left}" y="18">{title}</text>']
    for i in range(nt):
        y = top + (nt - 1 - i) * ch
        j = 0
        while j < nn:
            k = j
            while k + 1 < nn and idx[i, k + 1] == idx[i, j]:
                k += 1
            out.append(f'<rect x="{left + j * cell}" y="{y}" width="{(k - j + 1) * cell}" '
                       f'height="{ch}" fill="{PALETTE[idx[i, j]]}"/>')
            j = k + 1
    x_end, y_end = left + nn * cell, top + nt * ch
    out.append(f'<rect x="{left}" y="{top}" width="{nn * cell}" height="{nt * ch}" '
               'fill="none" stroke="black"/>')
    for j in sorted({0, nn // 2, nn - 1}):
        x = left + j * cell + cell / 2
        out.append(f'<text x="{x}" y="{y_end + 16}" text-anchor="middle">{grid.ns[j]}</text>')
    for i in sorted({0, nt // 2, nt - 1}):
        y = top + (nt - 1 - i) * ch + ch / 2 + 4
        out.append(f'<text x="{left - 6}" y="{y}" text-anchor="end">{grid.ts[i]:.3g}</text>')
    out.append(f'<text x="{(left + x_end) / 2}" y="{y_end + 34}" text-anchor="middle">n</text>')
    out.append(f'<text x="16" y="{(top + y_end) / 2}" text-anchor="middle">t</text>')
    bx = x_end + 20
    for k in range(256):
        y = top + (255 - k) * (nt * ch) / 256
        out.append(f'<rect x="{bx}" y="{y:.2f}" width="{bar - 10}" '
                   f'height="{nt * ch / 256 + 0.5:.2f}" fill="{PALETTE[k]}"/>')
    out.append(f'<text x="{bx + bar}" y="{top + 10}">{hi:.4g}</text>')
    out.append(f'<text x="{bx + bar}" y="{y_end}">{lo:.4g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(grid, path, title="|v|"):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(grid_to_svg(grid, title=title))


def finite_or_none(x):
    """JSON-safe float: infinities and NaN become ``None``."""
    return float(x) if x is not None and math.isfinite(x) else None

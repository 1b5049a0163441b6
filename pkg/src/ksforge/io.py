"""Serialization formats: KS-set JSON documents, text tables and DOT graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DocumentError
from .geometry import Geometry, bid_key, default_geometry, derive_gamma_table
from .parity import census_signature, is_parity_proof
from .rays import RayTable, inner_product

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class KSSetDocument:
    bases: tuple[str, ...]
    signature: str | None = None
    rays_per_basis: dict[str, list[int]] | None = None
    version: str = FORMAT_VERSION

    @classmethod
    def from_bases(cls, bases, geom: Geometry | None = None, expand: bool = False) -> "KSSetDocument":
        geom = geom or default_geometry()
        bases = tuple(sorted(set(bases), key=bid_key))
        sig = str(census_signature(bases, geom)) if is_parity_proof(bases, geom) else None
        rays = {b: geom[b].sorted_rays() for b in bases} if expand else None
        return cls(bases, sig, rays)

    def to_json(self) -> str:
        doc = {"version": self.version, "bases": list(self.bases)}
        if self.rays_per_basis is not None:
            doc["rays_per_basis"] = self.rays_per_basis
        if self.signature is not None:
            doc["signature"] = self.signature
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def parse(cls, text: str, geom: Geometry | None = None) -> "KSSetDocument":
        geom = geom or default_geometry()
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise DocumentError("document must be a JSON object")
        if raw.get("version") != FORMAT_VERSION:
            raise DocumentError(f"unsupported version {raw.get('version')!r}")
        bases = raw.get("bases")
        if not isinstance(bases, list) or not all(isinstance(b, str) for b in bases):
            raise DocumentError("'bases' must be a list of basis identifiers")
        unknown = [b for b in bases if b not in geom]
        if unknown:
            raise DocumentError(f"unknown bases {unknown}")
        if len(set(bases)) != len(bases):
            raise DocumentError("duplicate basis identifiers")
        rays = raw.get("rays_per_basis")
        if rays is not None:
            if rays != {b: geom[b].sorted_rays() for b in bases}:
                raise DocumentError("'rays_per_basis' disagrees with the basis geometry")
        sig = raw.get("signature")
        if sig is not None:
            actual = str(census_signature(bases, geom)) if is_parity_proof(bases, geom) else None
            if sig != actual:
                raise DocumentError(f"signature {sig!r} does not match recomputed {actual!r}")
        return cls(tuple(bases), sig, rays, raw["version"])


def format_components(components, bar: bool = False) -> str:
    neg = "1̄" if bar else "-1"
    return " ".join(neg if x < 0 else str(x) for x in components)


def rays_table(table: RayTable, bar: bool = False) -> str:
    """Table 1 layout: one column per pentagram line, eight rows."""
    columns = [table.column(c) for c in range(1, 6)]
    cells = [[f"R{r:<3} {format_components(table[r].components, bar)}" for r in col] for col in columns]
    width = max(len(c) for col in cells for c in col)
    lines = [" | ".join(f"{'line ' + str(c + 1):<{width}}" for c in range(5)).rstrip()]
    for row in range(8):
        lines.append(" | ".join(f"{col[row]:<{width}}" for col in cells).rstrip())
    return "\n".join(lines) + "\n"


def rays_json(table: RayTable) -> str:
    items = [{"id": r.id, "column": table.column_of[r.id], "components": list(r.components)} for r in table.rays]
    return json.dumps(items, indent=2) + "\n"


def bases_table(geom: Geometry) -> str:
    lines = []
    for bid, basis in geom.bases.items():
        rays = " ".join(f"{r:>2}" for r in basis.sorted_rays())
        if basis.is_pure:
            lines.append(f"{bid:<4} pure    line -       partner -    {rays}")
        else:
            a, b = basis.columns
            lines.append(f"{bid:<4} hybrid  line x{a}-x{b}   partner {geom.partner(bid):<4} {rays}")
    return "\n".join(lines) + "\n"


def bases_json(geom: Geometry) -> str:
    items = []
    for bid, basis in geom.bases.items():
        item = {"bid": bid, "kind": basis.kind, "rays": basis.sorted_rays()}
        if not basis.is_pure:
            item["line"] = [f"x{c}" for c in basis.columns]
            item["partner"] = geom.partner(bid)
        items.append(item)
    return json.dumps(items, indent=2) + "\n"


def gamma_table(geom: Geometry) -> str:
    entries = {(e.column, e.row): e for e in derive_gamma_table(geom)}
    lines = [("j  " + " | ".join(f"column {c:<5}" for c in range(1, 6))).rstrip()]
    for row in range(1, 9):
        cells = [" ".join(f"{r:>2}" for r in entries[(c, row)].rays) for c in range(1, 6)]
        lines.append(f"{row}  " + " | ".join(f"{cell:<12}" for cell in cells).rstrip())
    return "\n".join(lines) + "\n"


def gamma_json(geom: Geometry) -> str:
    items = [
        {"column": e.column, "row": e.row, "rays": list(e.rays), "triples": [list(t) for t in e.triples]}
        for e in derive_gamma_table(geom)
    ]
    return json.dumps(items, indent=2) + "\n"


def orthogonality_dot(table: RayTable) -> str:
    lines = ["graph orthogonality {"]
    for r in table.rays:
        lines.append(f'  R{r.id} [label="R{r.id}\\n{format_components(r.components)}"];')
    ids = list(table.ids())
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            if inner_product(table[a], table[b]) == 0:
                lines.append(f"  R{a} -- R{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bases_dot(geom: Geometry) -> str:
    """25 basis nodes; each line joins its two pures to its two hybrids; partners are dashed."""
    lines = ["graph bases {"]
    for bid, basis in geom.bases.items():
        shape = "doublecircle" if basis.is_pure else "circle"
        rays = " ".join(map(str, basis.sorted_rays()))
        lines.append(f'  {bid} [shape={shape}, label="{bid}\\n{rays}"];')
    for line in geom.lines:
        name = "-".join(line.pures)
        for pure in line.pures:
            for hyb in line.hybrids:
                lines.append(f'  {pure} -- {hyb} [line="{name}"];')
        y, yp = line.hybrids
        lines.append(f'  {y} -- {yp} [line="{name}", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"

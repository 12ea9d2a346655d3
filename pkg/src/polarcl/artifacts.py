"""File formats and run manifests.

Every JSON artifact embeds a manifest recording the command line, the
descriptor, seeds, tool version, timing, and completeness flags.
Re-running the same manifest reproduces the artifact byte-identically
apart from the timing fields: all orderings downstream are canonical and
the only randomness (test-corpus generation) is seeded.

Generator-set files are plain text: either one `idx:N` line per member
(N an index into the canonical generator order of the space) or one
serialized subspace per line, semicolon-separated echelon rows of
comma-separated field-element encodings.  Non-canonical matrices are
rejected with a hint showing the normalized form.
"""

from __future__ import annotations

import json
import time

from . import __version__
from .enumeration import PolarSpace, get_space
from .geometry import GeometryError, descriptor, gf_rref


def make_manifest(command, desc=None, seed=None, completeness=None,
                  extra=None) -> dict:
    man = {
        "tool": "polarcl",
        "version": __version__,
        "command": list(command),
        "timing": {"unix_time": time.time()},
    }
    if desc is not None:
        man["descriptor"] = {
            "family": desc.family, "rank": desc.rank, "q": desc.q,
            "dim": desc.dim, "name": desc.name(),
        }
    if seed is not None:
        man["seed"] = seed
    if completeness is not None:
        man["completeness"] = completeness
    if extra:
        man.update(extra)
    return man


def write_json(path, payload: dict):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def space_payload(space: PolarSpace, command) -> dict:
    return {
        "manifest": make_manifest(command, space.desc),
        "points": [",".join(str(x) for x in p) for p in space.points],
        "generators": [space.serialize_subspace(g) for g in space.generators],
        "generator_classes": space.class_labels,
        "counts": {str(k): len(v) for k, v in space.levels.items()},
    }


def load_space(path) -> PolarSpace:
    """Rebuild the space from its descriptor and verify the stored lists.

    Enumeration is deterministic, so the canonical order in the file must
    match the rebuilt one exactly; anything else means a corrupt or
    foreign file.
    """
    with open(path) as fh:
        data = json.load(fh)
    d = data["manifest"]["descriptor"]
    space = get_space(d["family"], d["rank"], d["q"], d["dim"])
    gens = [space.serialize_subspace(g) for g in space.generators]
    if data["generators"] != gens:
        raise GeometryError(f"{path}: generator list does not match the "
                            f"canonical enumeration of {space.name()}")
    return space


def parse_subspace_line(line: str, space: PolarSpace):
    rows = []
    for part in line.strip().split(";"):
        row = tuple(int(x) for x in part.split(","))
        if len(row) != space.desc.nvars:
            raise GeometryError(
                f"row {part!r} has {len(row)} entries, ambient needs "
                f"{space.desc.nvars}")
        for x in row:
            if not 0 <= x < space.desc.q:
                raise GeometryError(f"entry {x} is not a field encoding "
                                    f"(0..{space.desc.q - 1})")
        rows.append(row)
    canon = gf_rref(rows, space.gf)[0]
    if tuple(rows) != canon:
        raise GeometryError(
            f"subspace {line.strip()!r} is not in reduced echelon form; "
            f"normalized form: {space.serialize_subspace(canon)!r}")
    return canon


def load_generator_set(path, space: PolarSpace) -> int:
    """Read a set file into a bitmask over the canonical generator order."""
    mask = 0
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("idx:"):
                idx = int(line[4:])
                if not 0 <= idx < space.n_generators:
                    raise GeometryError(f"generator index {idx} out of range")
            else:
                canon = parse_subspace_line(line, space)
                if canon not in space.gen_index:
                    raise GeometryError(
                        f"{line!r} is not a generator of {space.name()}")
                idx = space.gen_index[canon]
            mask |= 1 << idx
    return mask


def write_generator_set(path, space: PolarSpace, mask: int,
                        explicit: bool = False):
    with open(path, "w") as fh:
        g = 0
        m = mask
        while m:
            if m & 1:
                if explicit:
                    fh.write(space.serialize_subspace(space.generators[g]) + "\n")
                else:
                    fh.write(f"idx:{g}\n")
            m >>= 1
            g += 1


def load_spreads(path, space: PolarSpace) -> list[int]:
    with open(path) as fh:
        data = json.load(fh)
    out = []
    for sol in data["solutions"]:
        mask = 0
        for idx in sol:
            mask |= 1 << idx
        out.append(mask)
    return out

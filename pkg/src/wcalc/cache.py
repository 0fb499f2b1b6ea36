"""On-disk cache of enumerated Weyl group tables as versioned JSON.

The canonical enumeration (action tables, words, lengths and the simple
multiplication tables) is stored and restored without re-enumerating.  A
file whose schema, Cartan matrix or tables do not check out is rebuilt.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .rootdata import build_root_system
from .weyl import _GROUPS, WeylGroup, register_group, weyl_group

SCHEMA_VERSION = 1
log = logging.getLogger(__name__)


def cache_dir(explicit: str | None = None) -> Path | None:
    d = explicit or os.environ.get("WCALC_CACHE")
    return Path(d) if d else None


def _path(d: Path, name: str) -> Path:
    return d / f"weyl-{name}.json"


def _payload(W: WeylGroup) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "type": W.rs.name,
        "cartan": [list(r) for r in W.rs.cartan],
        "images": [[list(r) for r in e.images] for e in W.elements],
        "words": [list(w) for w in W.words],
        "lengths": W.lengths,
        "right": [list(r) for r in W.right],
        "left": [list(r) for r in W.left],
    }


def _restore(data: dict, rs) -> WeylGroup:
    if data.get("schema") != SCHEMA_VERSION or data.get("cartan") != [list(r) for r in rs.cartan]:
        raise ValueError("schema or Cartan matrix mismatch")
    n = rs.order
    images, words, lengths = data["images"], data["words"], data["lengths"]
    right, left = data["right"], data["left"]
    if not all(len(t) == n for t in (images, words, lengths, right, left)):
        raise ValueError("table sizes disagree with the group order")
    W = WeylGroup.from_tables(rs, images, words, lengths, right, left)
    # cheap consistency: each word must rebuild its own element
    for k in range(n):
        if W.from_word(W.words[k]).index != k or len(W.words[k]) != W.lengths[k]:
            raise ValueError(f"word table inconsistent at element {k}")
    return W


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_group(name: str, d: Path | None) -> tuple[WeylGroup, str]:
    """The shared Weyl group for ``name`` and the cache status.

    Status is one of off, memory, hit, miss or rebuilt.
    """
    rs = build_root_system(name)
    if d is None:
        return weyl_group(rs), "off"
    p = _path(d, rs.name)
    if rs in _GROUPS:
        W = _GROUPS[rs]
        if not p.exists():
            write_atomic(p, json.dumps(_payload(W), separators=(",", ":")))
        return W, "memory"
    status = "miss"
    if p.exists():
        try:
            W = _restore(json.loads(p.read_text()), rs)
            return register_group(W), "hit"
        except (OSError, ValueError, KeyError, TypeError, IndexError) as e:
            log.warning("cache file %s is corrupt (%s); rebuilding", p, e)
            status = "rebuilt"
    W = weyl_group(rs)
    write_atomic(p, json.dumps(_payload(W), separators=(",", ":")))
    return W, status


def clear(d: Path | None) -> int:
    if d is None or not d.exists():
        return 0
    n = 0
    for p in d.glob("weyl-*.json"):
        p.unlink()
        n += 1
    return n

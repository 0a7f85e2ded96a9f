"""On-disk cache of enumerated group tables.

One ``.npz`` file per group, named by the sha256 of (spec, format version).
The file holds the sorted rows, their keys, the generator indices and enough
metadata to rebuild the representation.  Unreadable or inconsistent files are
discarded with a warning and the table is rebuilt.
"""
from __future__ import annotations

import hashlib
import json
import os
import warnings
from pathlib import Path

import numpy as np

from .families import parse_spec, make_group
from .field import get_field
from .reps import MatRep, PermRep, ProductRep, ProjRep, Rep
from .table import DEFAULT_CAP, CapExceeded, GroupTable

FORMAT_VERSION = 1
ENV_VAR = "THETAORBITS_CACHE"


class CacheWarning(UserWarning):
    pass


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "thetaorbits"


def cache_key(spec: str, version: int = FORMAT_VERSION) -> str:
    canon = parse_spec(spec).text
    return hashlib.sha256(f"{canon}\n{version}".encode()).hexdigest()


def cache_path(spec: str, directory: Path | str | None = None, version: int = FORMAT_VERSION) -> Path:
    d = Path(directory) if directory is not None else default_dir()
    return d / f"{cache_key(spec, version)}.npz"


def _rep_meta(rep: Rep) -> dict:
    if isinstance(rep, PermRep):
        return {"kind": "perm", "n": rep.n}
    if isinstance(rep, ProjRep):
        return {"kind": "proj", "n": rep.mat.n, "q": rep.mat.field.q}
    if isinstance(rep, MatRep):
        return {"kind": "mat", "n": rep.n, "q": rep.field.q}
    if isinstance(rep, ProductRep):
        return {"kind": "prod", "factors": [f.spec for f in rep.factors]}
    raise TypeError(f"cannot cache representation {type(rep).__name__}")


def _rep_from_meta(meta: dict, directory) -> Rep:
    kind = meta["kind"]
    if kind == "perm":
        return PermRep(meta["n"])
    if kind == "mat":
        return MatRep(meta["n"], get_field(meta["q"]))
    if kind == "proj":
        return ProjRep(meta["n"], get_field(meta["q"]))
    if kind == "prod":
        return ProductRep([load_or_build(s, directory=directory) for s in meta["factors"]])
    raise ValueError(f"unknown representation kind {kind!r}")


def store(G: GroupTable, directory: Path | str | None = None) -> Path:
    path = cache_path(G.spec, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    meta = {"spec": parse_spec(G.spec).text, "version": FORMAT_VERSION, "rep": _rep_meta(G.rep)}
    tmp = path.with_suffix(".tmp.npz")
    np.savez(tmp, rows=G.rows, keys=G.keys, generators=np.asarray(G.generators, dtype=np.int64),
             meta=np.array(json.dumps(meta)))
    os.replace(tmp, path)
    return path


def load(spec: str, directory: Path | str | None = None) -> GroupTable | None:
    """The cached table, or None when missing or unusable."""
    path = cache_path(spec, directory)
    if not path.exists():
        return None
    try:
        with np.load(path, allow_pickle=False) as z:
            meta = json.loads(str(z["meta"]))
            rows, keys, gens = z["rows"], z["keys"], z["generators"]
        if meta.get("version") != FORMAT_VERSION or meta.get("spec") != parse_spec(spec).text:
            raise ValueError("metadata mismatch")
        rep = _rep_from_meta(meta["rep"], directory)
        if not np.array_equal(rep.keys(rows), keys) or np.any(np.diff(keys) <= 0):
            raise ValueError("rows and keys disagree")
        return GroupTable(rep, rows, keys=keys, generators=gens.tolist(), spec=meta["spec"])
    except Exception as e:  # any damage means rebuild
        warnings.warn(f"discarding corrupt cache file {path}: {e}", CacheWarning, stacklevel=2)
        try:
            path.unlink()
        except OSError:
            pass
        return None


def load_or_build(spec: str, cap: int = DEFAULT_CAP, directory: Path | str | None = None) -> GroupTable:
    G = load(spec, directory)
    if G is not None:
        if len(G) > cap:
            raise CapExceeded(f"{spec}: order {len(G)} exceeds cap {cap}")
        return G
    G = make_group(spec, cap)
    try:
        store(G, directory)
    except (OSError, TypeError) as e:
        warnings.warn(f"could not write cache for {spec}: {e}", CacheWarning, stacklevel=2)
    return G

#!/usr/bin/env python3
import sys

sys.path.append("../")
import argparse
import logging

from ar.catalog import module_catalog
from models.errors import HcatError
from morphism.catalog import h_catalog
from storage.local_backend import LocalReportBackend

parser = argparse.ArgumentParser(description="Lists bundled algebras with their catalog sizes.")
parser.add_argument("--with-h", action="store_true", help="Also enumerate ind H(Λ) (slow).")
parser.add_argument("--max-dim", type=int, default=None)


def summarize(backend: LocalReportBackend, name: str, with_h: bool, max_dim=None) -> str:
    loaded = backend.load_algebra(name)
    try:
        modules = module_catalog(loaded.algebra, max_dim)
    except HcatError as e:
        return f"{name}: {e}"
    line = f"{name}: {loaded.algebra.name}, {len(modules)} ind modules"
    if with_h:
        line += f", {len(h_catalog(loaded.algebra, max_dim))} ind objects of H"
    return line


if __name__ == "__main__":
    args = parser.parse_args()
    logging.basicConfig(level=logging.WARNING)
    backend = LocalReportBackend()
    for name in backend.list_algebras():
        print(summarize(backend, name, args.with_h, args.max_dim))

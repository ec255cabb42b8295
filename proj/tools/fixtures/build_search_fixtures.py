#!/usr/bin/env python3
"""Writes replay search fixtures from a sources file.

Each entry in the sources file names a query, its language and the results
every adapter returns. Output goes to <out>/<adapter>/<sha256(query|lang)>.json.
"""
import argparse
import hashlib
import json
import pathlib


def fixture_key(query: str, language: str) -> str:
    normalized = " ".join(query.split())
    return hashlib.sha256(f"{normalized}|{language}".encode("utf-8")).hexdigest()


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("sources", type=pathlib.Path)
    parser.add_argument("out", type=pathlib.Path)
    args = parser.parse_args()

    entries = json.loads(args.sources.read_text(encoding="utf-8"))
    written = 0
    for entry in entries:
        key = fixture_key(entry["query"], entry["language"])
        for adapter, results in entry["adapters"].items():
            path = args.out / adapter / f"{key}.json"
            path.parent.mkdir(parents=True, exist_ok=True)
            body = {"query": entry["query"], "language": entry["language"], "results": results}
            path.write_text(json.dumps(body, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
            written += 1
    print(f"wrote {written} fixture files")


if __name__ == "__main__":
    main()

"""Run the CLI on the fixtures and validate every JSON report against docs/report.schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    tool, source, out = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    out.mkdir(parents=True, exist_ok=True)
    fixtures = source / "fixtures"
    schema = json.loads((source / "docs" / "report.schema.json").read_text())
    runs = {
        "stats": ["stats", str(fixtures / "two_cliques.csv")],
        "stats_registry": ["stats", str(fixtures / "two_cliques.csv"), "--registry",
                           str(fixtures / "two_cliques_registry.txt")],
        "baseline": ["baseline", "--n", "20", "--p", "0.3", "--samples", "20"],
        "richclub": ["richclub", str(fixtures / "planted.csv")],
        "communities": ["communities", str(fixtures / "planted.csv"), "--exclude-richclub"],
        "hemicycle": ["hemicycle", str(fixtures / "planted.csv")],
        "report": ["report", str(fixtures / "planted.csv"), "--samples", "20"],
    }
    examples = sorted((source / "docs" / "examples").glob("*.json"))
    failures = 0
    validator = jsonschema.Draft202012Validator(schema)
    for name, args in runs.items():
        target = out / f"{name}.json"
        proc = subprocess.run([tool, "--json", str(target), *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {name}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(target.read_text())))
        for e in errors:
            print(f"FAIL {name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {name}")
    for path in examples:
        errors = list(validator.iter_errors(json.loads(path.read_text())))
        for e in errors:
            print(f"FAIL docs/examples/{path.name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   docs/examples/{path.name}")
    if len(examples) < 3:
        print(f"FAIL expected at least three example reports, found {len(examples)}")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

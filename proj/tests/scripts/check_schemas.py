"""Validate CLI JSON output against the schemas in docs/schemas."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values()
)


def check(schema_name, args):
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True)
    doc = json.loads(out.stdout)
    Draft202012Validator(schemas[schema_name], registry=registry).validate(doc)
    return doc


check("presentation.v1.json", ["present", "sp", "--n", "3", "--format", "json"])
check("presentation.v1.json", ["present", "center", "--n", "4", "--format", "json"])
check("presentation.v1.json",
      ["invariant", "group", "--rep", "phi3", "--strands", "2",
       "--braid", "S1 t1", "--simplify", "--format", "json"])
census = check("singquandle-census.v1.json", ["sq", "census", "--order", "2"])
assert len(census["models"]) == 16
for m in census["models"]:
    Draft202012Validator(schemas["singquandle-model.v1.json"]).validate(m)
print("schemas ok")

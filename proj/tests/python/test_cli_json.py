# Copyright 2026 The infima Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Every --json output validates against its shipped schema."""

import json

import jsonschema
import pytest

CASES = [
    ("count", ["count", "[[*,*],[*,*,*]]"]),
    ("oracle", ["oracle", "[[*,*],[*,*,*]]"]),
    ("search", ["search", "--max-n", "12"]),
    ("search", ["search", "--max-n", "5", "--audit"]),
    ("search", ["search", "--max-n", "8", "--mode", "exhaustive"]),
    ("construct", ["construct", "--n", "17"]),
    ("construct", ["construct", "--n", "17", "--standard-form"]),
    ("alpha", ["alpha", "--digits", "40"]),
    ("bounds", ["bounds", "--max-n", "50"]),
]


@pytest.mark.parametrize("name,args", CASES)
def test_json_validates(cli, schema, name, args):
    document = json.loads(cli(*args, "--json").stdout)
    jsonschema.validate(document, schema(name))


def test_schemas_are_well_formed(schema):
    for name in {name for name, _ in CASES}:
        jsonschema.Draft202012Validator.check_schema(schema(name))


def test_audit_failure_validates_and_exits_1(cli, schema):
    proc = cli("search", "--max-n", "6", "--audit", "--json", check=False)
    assert proc.returncode == 1
    document = json.loads(proc.stdout)
    jsonschema.validate(document, schema("search"))
    assert document["audit_passed"] is False


def test_ratio_csv(cli, tmp_path):
    out = tmp_path / "ratio.csv"
    cli("ratio", "--max-n", "30", "--csv", str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == "n,ratio"
    assert len(lines) == 31


def test_usage_error(cli):
    proc = cli("count", check=False)
    assert proc.returncode == 2
    assert "tree :=" in proc.stderr

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

import json
import os
import pathlib
import shutil
import subprocess

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("INFIMA_CLI") or shutil.which("infima")
    if not path:
        pytest.skip("infima executable not found; set INFIMA_CLI")

    def run(*args, check=True):
        proc = subprocess.run([path, *args], capture_output=True, text=True)
        if check and proc.returncode != 0:
            raise AssertionError(f"exit {proc.returncode}: {proc.stderr}")
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    root = pathlib.Path(
        os.environ.get(
            "INFIMA_SCHEMA_DIR",
            pathlib.Path(__file__).resolve().parents[2] / "schema",
        )
    )

    def load(name):
        return json.loads((root / f"{name}.schema.json").read_text())

    return load

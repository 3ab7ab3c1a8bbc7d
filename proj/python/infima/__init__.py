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
"""Infima-closed set counts, minimal trees and the growth constant alpha.

Trees are strings in bracket notation: ``"*"`` is one vertex and
``"[A,B,...]"`` is a root with branches A, B, ...
"""

from ._core import (
    SearchMismatch,
    TreeParseError,
    alpha,
    audit,
    audit_check_ids,
    beta,
    canonical,
    construct_minimal,
    count,
    count_required,
    generate_all_trees,
    height,
    minimal_table,
    oracle_count,
    order,
    ratio_series,
    verify_bounds,
    x_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "SearchMismatch",
    "TreeParseError",
    "alpha",
    "audit",
    "audit_check_ids",
    "beta",
    "canonical",
    "construct_minimal",
    "count",
    "count_required",
    "generate_all_trees",
    "height",
    "minimal_table",
    "oracle_count",
    "order",
    "ratio_series",
    "verify_bounds",
    "x_sequence",
]

# Copyright 2026 The genco Authors
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

"""Python bindings for the genco solvers."""

from genco._core import (
    SampleError,
    estimate_grid,
    gini,
    isotonic_l1_fit,
    limit_dist,
    majorizes,
    market_equilibria,
    pava_reduce,
    poa_estimate,
    poa_tight,
    score_class,
    se_bound,
    shannon_entropy,
    solve_eq,
    solve_opt,
    u,
    ustat_self,
    w,
    wi,
    wi_avg,
)

__version__ = "0.1.0"

__all__ = [
    "SampleError",
    "estimate_grid",
    "gini",
    "isotonic_l1_fit",
    "limit_dist",
    "majorizes",
    "market_equilibria",
    "pava_reduce",
    "poa_estimate",
    "poa_tight",
    "score_class",
    "se_bound",
    "shannon_entropy",
    "solve_eq",
    "solve_opt",
    "u",
    "ustat_self",
    "w",
    "wi",
    "wi_avg",
]

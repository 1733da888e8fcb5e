# Copyright 2026 The exmatch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact Matching on red/blue edge-colored graphs."""

from ._core import (
    ConfigError,
    Error,
    Graph,
    InputError,
    OracleCapError,
    ParameterTooSmallError,
    ParseError,
    approx,
    bipartite_independence_number,
    count_perfect_matchings,
    distance_independence_number,
    em_decide_bruteforce,
    enumerate_perfect_matchings,
    f_alpha,
    f_beta,
    find_skip,
    gen_planted_yes,
    generate,
    independence_number,
    is_perfect_matching,
    lift_to_dense,
    lift_to_dense_bipartite,
    max_red_pm,
    max_weight_perfect_matching,
    min_red_pm,
    pullback_matching,
    red_count,
    solve,
    symmetric_difference,
    t_alpha,
    t_beta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

# Copyright 2026 The SignalScope Authors.
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

"""TimeML temporal signal profiling, disambiguation and relation prediction."""

from signalscope._core import (
    Corpus,
    Document,
    RelationMatrix,
    SignalScopeError,
    ambiguity_table,
    disambiguate,
    evaluate,
    fold_relation,
    lint,
    load_corpus,
    parse,
    run_cli,
    signal_pos,
    tlinks_per_signal,
    train,
    usage_summary,
)

__all__ = [
    "Corpus",
    "Document",
    "RelationMatrix",
    "SignalScopeError",
    "ambiguity_table",
    "disambiguate",
    "evaluate",
    "fold_relation",
    "lint",
    "load_corpus",
    "parse",
    "run_cli",
    "signal_pos",
    "tlinks_per_signal",
    "train",
    "usage_summary",
]

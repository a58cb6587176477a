# Copyright 2026 The Sitnet Authors.
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


"""Writes gold.tsv for each bundled scenario.

Labels every (seed, relation, target) triple the generated network can answer.
IsA is true when the node's synset is the intended sense or one of its
ancestors. An attribute is true when a trusted edge (weight >= 2) links the
seed or an ancestor of its intended sense to the target, with locations closed
under containment.
"""

import argparse
import os
import subprocess
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import make_fixtures as fx  # noqa: E402

TRUSTED_WEIGHT = 2.0
RELATIONS = ("AtLocation", "HasProperty", "UsedFor")


def norm(term):
    return term.strip().lower().replace(" ", "_")


def ancestors(synsets, key):
    seen, stack = set(), [key]
    while stack:
        k = stack.pop()
        if k in seen:
            continue
        seen.add(k)
        stack.extend(synsets[k]["hypernyms"])
    return seen


def trusted_edges():
    out = {r: {} for r in RELATIONS}
    for rel, start, end, weight in fx.EDGES:
        if rel in out and weight >= TRUSTED_WEIGHT:
            out[rel].setdefault(norm(start), set()).add(norm(end))
    return out


def location_closure(locations, edges):
    result, frontier = set(locations), list(locations)
    while frontier:
        loc = frontier.pop()
        for nxt in edges["AtLocation"].get(loc, ()):
            if nxt not in result:
                result.add(nxt)
                frontier.append(nxt)
    return result


def read_graph(path):
    concepts, targets = {}, {r: set() for r in RELATIONS}
    with open(path) as f:
        for line in f:
            f_ = line.rstrip("\n").split("\t")
            if f_[0] == "NODE":
                node_id, kind, synset = f_[1], f_[2], f_[3]
                term = node_id.split(":", 1)[-1]
                if kind == "concept":
                    concepts[term] = synset
                elif kind == "location":
                    targets["AtLocation"].add(term)
                elif kind == "property":
                    targets["HasProperty"].add(term)
                elif kind == "affordance":
                    targets["UsedFor"].add(term)
    return concepts, targets


def gold_lines(name, scenario, synsets, graph_path):
    edges = trusted_edges()
    concepts, targets = read_graph(graph_path)
    lines = []
    for seed in scenario["seeds"]:
        sense = scenario["senses"][seed]
        lines.append("SENSE\t%s\t%s" % (seed, synsets[sense]["id"]))
    for seed in scenario["seeds"]:
        anc = ancestors(synsets, scenario["senses"][seed])
        anc_ids = {synsets[k]["id"] for k in anc}
        terms = {norm(l) for k in anc for l in synsets[k]["lemmas"]}
        for concept, synset in sorted(concepts.items()):
            lines.append("REL\t%s\tIsA\t%s\t%d" % (seed, concept, synset in anc_ids))
        truth = {}
        for rel in RELATIONS:
            truth[rel] = set()
            for t in terms:
                truth[rel] |= edges[rel].get(t, set())
        truth["AtLocation"] = location_closure(truth["AtLocation"], edges)
        for rel in RELATIONS:
            for target in sorted(targets[rel]):
                lines.append("REL\t%s\t%s\t%s\t%d" % (seed, rel, target, target in truth[rel]))
    return lines


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sitnet", default="build/sitnet")
    ap.add_argument("--data", default="data")
    args = ap.parse_args()
    synsets, _ = fx.parse_taxonomy()
    for name, scenario in fx.SCENARIOS.items():
        scen = os.path.join(args.data, "scenarios", name)
        with tempfile.TemporaryDirectory() as tmp:
            subprocess.run([args.sitnet, "generate", "--config", os.path.join(scen, "scenario.conf"),
                            "--out", tmp], check=True, stdout=subprocess.DEVNULL)
            lines = gold_lines(name, scenario, synsets, os.path.join(tmp, "graph.txt"))
        with open(os.path.join(scen, "gold.tsv"), "w") as f:
            f.write("\n".join(lines) + "\n")
        print("%s: %d labels" % (name, len(lines)))


if __name__ == "__main__":
    main()

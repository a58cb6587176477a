// Copyright 2026 The Sitnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sitnet/inference.h"

#include <algorithm>

#include "sitnet/error.h"
#include "sitnet/random.h"

namespace sitnet {

namespace {

// Ternary per-variable state: -1 unobserved, else 0/1.
std::vector<int8_t> ClampEvidence(const GroundNetwork& net, const Evidence& evidence,
                                  std::vector<size_t>* indices) {
  std::vector<int8_t> clamp(net.size(), -1);
  for (const auto& [name, value] : evidence) {
    size_t i = net.IndexOrThrow(name);
    clamp[i] = value ? 1 : 0;
    if (indices != nullptr) indices->push_back(i);
  }
  return clamp;
}

size_t Row(const GroundVariable& v, const std::vector<uint8_t>& state) {
  size_t row = 0;
  for (size_t p : v.parents) row = (row << 1) | state[p];
  return row;
}

}  // namespace

std::vector<size_t> RelevantVariables(const GroundNetwork& net,
                                      const std::vector<size_t>& targets) {
  std::vector<uint8_t> keep(net.size(), 0);
  std::vector<size_t> pending = targets;
  while (!pending.empty()) {
    size_t i = pending.back();
    pending.pop_back();
    if (keep[i]) continue;
    keep[i] = 1;
    for (size_t p : net.variable(i).parents) pending.push_back(p);
  }
  std::vector<size_t> out;
  for (size_t i : net.order()) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

double InferExact(const GroundNetwork& net, std::string_view query, const Evidence& evidence,
                  size_t limit) {
  size_t q = net.IndexOrThrow(query);
  std::vector<size_t> targets{q};
  std::vector<int8_t> clamp = ClampEvidence(net, evidence, &targets);
  if (clamp[q] >= 0) return clamp[q];
  std::vector<size_t> order = RelevantVariables(net, targets);
  size_t free_vars = 0;
  for (size_t i : order) free_vars += clamp[i] < 0 ? 1 : 0;
  if (free_vars > limit) {
    throw TooLargeError("exact inference over " + std::to_string(free_vars) +
                        " free variables exceeds the limit of " + std::to_string(limit) +
                        "; use lw or gibbs");
  }
  std::vector<uint8_t> state(net.size(), 0);
  double hit = 0.0, total = 0.0;
  // Depth-first over the relevant variables in topological order.
  auto recurse = [&](auto& self, size_t pos, double weight) -> void {
    if (pos == order.size()) {
      total += weight;
      if (state[q]) hit += weight;
      return;
    }
    size_t v = order[pos];
    const GroundVariable& var = net.variable(v);
    double p1 = var.cpf[Row(var, state)];
    if (clamp[v] >= 0) {
      state[v] = static_cast<uint8_t>(clamp[v]);
      double w = clamp[v] ? p1 : 1.0 - p1;
      if (w > 0.0) self(self, pos + 1, weight * w);
      return;
    }
    if (p1 > 0.0) {
      state[v] = 1;
      self(self, pos + 1, weight * p1);
    }
    if (p1 < 1.0) {
      state[v] = 0;
      self(self, pos + 1, weight * (1.0 - p1));
    }
  };
  recurse(recurse, 0, 1.0);
  if (total <= 0.0) throw Error("evidence has probability zero");
  return hit / total;
}

std::map<std::string, Estimate> LikelihoodWeightingMarginals(
    const GroundNetwork& net, const std::vector<std::string>& queries, const Evidence& evidence,
    size_t n_samples, uint64_t seed) {
  if (n_samples == 0) throw ConfigError("n_samples must be at least 1");
  std::vector<size_t> targets;
  std::vector<int8_t> clamp = ClampEvidence(net, evidence, &targets);
  std::vector<size_t> query_index;
  for (const auto& name : queries) {
    query_index.push_back(net.IndexOrThrow(name));
    targets.push_back(query_index.back());
  }
  std::vector<size_t> order = RelevantVariables(net, targets);
  std::vector<uint8_t> state(net.size(), 0);
  std::vector<double> hits(queries.size(), 0.0);
  double total = 0.0;
  Rng rng(seed);
  for (size_t s = 0; s < n_samples; ++s) {
    double weight = 1.0;
    for (size_t v : order) {
      const GroundVariable& var = net.variable(v);
      double p1 = var.cpf[Row(var, state)];
      if (clamp[v] >= 0) {
        state[v] = static_cast<uint8_t>(clamp[v]);
        weight *= clamp[v] ? p1 : 1.0 - p1;
      } else {
        state[v] = rng.Uniform() < p1 ? 1 : 0;
      }
    }
    total += weight;
    for (size_t k = 0; k < query_index.size(); ++k) {
      if (state[query_index[k]]) hits[k] += weight;
    }
  }
  std::map<std::string, Estimate> out;
  for (size_t k = 0; k < queries.size(); ++k) {
    Estimate e;
    if (clamp[query_index[k]] >= 0) {
      e.probability = clamp[query_index[k]];
    } else if (total > 0.0) {
      e.probability = hits[k] / total;
    } else {
      e.zero_weight = true;
    }
    out[queries[k]] = e;
  }
  return out;
}

Estimate InferLikelihoodWeighting(const GroundNetwork& net, std::string_view query,
                                  const Evidence& evidence, size_t n_samples, uint64_t seed) {
  std::string name(query);
  return LikelihoodWeightingMarginals(net, {name}, evidence, n_samples, seed).at(name);
}

std::map<std::string, double> GibbsMarginals(const GroundNetwork& net,
                                             const std::vector<std::string>& queries,
                                             const Evidence& evidence, size_t burn_in,
                                             size_t n_samples, uint64_t seed) {
  if (n_samples == 0) throw ConfigError("n_samples must be at least 1");
  std::vector<size_t> targets;
  std::vector<int8_t> clamp = ClampEvidence(net, evidence, &targets);
  std::vector<size_t> query_index;
  for (const auto& name : queries) {
    query_index.push_back(net.IndexOrThrow(name));
    targets.push_back(query_index.back());
  }
  std::vector<size_t> order = RelevantVariables(net, targets);
  for (size_t v = 0; v < net.size(); ++v) {
    if (clamp[v] >= 0) continue;
    for (double p : net.variable(v).cpf) {
      if (p == 0.0 || p == 1.0) {
        throw ErgodicityError("variable " + net.variable(v).name +
                              " has a deterministic CPF row; use likelihood weighting");
      }
    }
  }
  std::vector<std::vector<size_t>> children(net.size());
  for (size_t v : order) {
    for (size_t p : net.variable(v).parents) children[p].push_back(v);
  }

  Rng rng(seed);
  std::vector<uint8_t> state(net.size(), 0);
  // Full conditional of v = 1 given its Markov blanket.
  std::vector<double> conditional(net.size(), 0.0);
  auto update = [&](size_t v) {
    const GroundVariable& var = net.variable(v);
    double weight[2];
    for (uint8_t value = 0; value < 2; ++value) {
      state[v] = value;
      double p1 = var.cpf[Row(var, state)];
      double w = value ? p1 : 1.0 - p1;
      for (size_t c : children[v]) {
        const GroundVariable& child = net.variable(c);
        double pc = child.cpf[Row(child, state)];
        w *= state[c] ? pc : 1.0 - pc;
      }
      weight[value] = w;
    }
    double sum = weight[0] + weight[1];
    double p = sum > 0.0 ? weight[1] / sum : 0.5;
    conditional[v] = p;
    state[v] = rng.Uniform() < p ? 1 : 0;
  };
  std::vector<size_t> free_vars;
  for (size_t v : order) {
    if (clamp[v] < 0) free_vars.push_back(v);
  }
  // Near-deterministic rows make single-site moves rare, so the sweeps are
  // spread over independent chains, each started from a forward sample.
  const size_t chains = std::clamp<size_t>(n_samples / kGibbsSweepsPerChain, 1, kGibbsMaxChains);
  std::vector<double> sums(queries.size(), 0.0);
  for (size_t chain = 0; chain < chains; ++chain) {
    for (size_t v : order) {
      const GroundVariable& var = net.variable(v);
      state[v] = clamp[v] >= 0 ? static_cast<uint8_t>(clamp[v])
                               : (rng.Uniform() < var.cpf[Row(var, state)] ? 1 : 0);
    }
    size_t burn = burn_in / chains + (chain < burn_in % chains ? 1 : 0);
    for (size_t sweep = 0; sweep < burn; ++sweep) {
      for (size_t v : free_vars) update(v);
    }
    size_t sweeps = n_samples / chains + (chain < n_samples % chains ? 1 : 0);
    for (size_t sweep = 0; sweep < sweeps; ++sweep) {
      for (size_t v : free_vars) update(v);
      for (size_t k = 0; k < query_index.size(); ++k) {
        size_t q = query_index[k];
        sums[k] += clamp[q] >= 0 ? clamp[q] : conditional[q];
      }
    }
  }
  std::map<std::string, double> out;
  for (size_t k = 0; k < queries.size(); ++k) {
    out[queries[k]] = sums[k] / static_cast<double>(n_samples);
  }
  return out;
}

double InferGibbs(const GroundNetwork& net, std::string_view query, const Evidence& evidence,
                  size_t burn_in, size_t n_samples, uint64_t seed) {
  std::string name(query);
  return GibbsMarginals(net, {name}, evidence, burn_in, n_samples, seed).at(name);
}

}  // namespace sitnet

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

#ifndef SITNET_INFERENCE_H_
#define SITNET_INFERENCE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sitnet/bln.h"

namespace sitnet {

// Observed values by ground variable name.
using Evidence = std::map<std::string, bool, std::less<>>;

// Enumeration refuses networks with more free variables than this.
inline constexpr size_t kExactVariableLimit = 25;

// Gibbs splits its burn-in and sample sweeps over independent chains of
// about this many sample sweeps each.
inline constexpr size_t kGibbsSweepsPerChain = 20;
inline constexpr size_t kGibbsMaxChains = 10000;

// Query, evidence and all of their ancestors, parents before children.
// Everything else is barren for the query and can be dropped.
std::vector<size_t> RelevantVariables(const GroundNetwork& net, const std::vector<size_t>& targets);

// P(query = true | evidence) by enumerating the joint over the relevant
// variables. Throws TooLargeError past `limit` free variables.
double InferExact(const GroundNetwork& net, std::string_view query, const Evidence& evidence,
                  size_t limit = kExactVariableLimit);

struct Estimate {
  double probability = 0.5;
  bool zero_weight = false;  // every sample had weight 0
};

Estimate InferLikelihoodWeighting(const GroundNetwork& net, std::string_view query,
                                  const Evidence& evidence, size_t n_samples, uint64_t seed);

// All queries answered from one set of weighted samples.
std::map<std::string, Estimate> LikelihoodWeightingMarginals(
    const GroundNetwork& net, const std::vector<std::string>& queries, const Evidence& evidence,
    size_t n_samples, uint64_t seed);

// Single-site Gibbs sampling over independent chains started from forward
// samples; the estimate averages each query's full conditional over the
// post-burn-in sweeps. Throws ErgodicityError if an unclamped variable has a
// 0 or 1 CPF row.
double InferGibbs(const GroundNetwork& net, std::string_view query, const Evidence& evidence,
                  size_t burn_in, size_t n_samples, uint64_t seed);

std::map<std::string, double> GibbsMarginals(const GroundNetwork& net,
                                             const std::vector<std::string>& queries,
                                             const Evidence& evidence, size_t burn_in,
                                             size_t n_samples, uint64_t seed);

}  // namespace sitnet

#endif  // SITNET_INFERENCE_H_

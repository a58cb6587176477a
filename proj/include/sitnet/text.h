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

#ifndef SITNET_TEXT_H_
#define SITNET_TEXT_H_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sitnet {

using StopwordSet = std::unordered_set<std::string>;

// Lowercases, trims, and replaces runs of spaces with a single underscore.
std::string NormalizeTerm(std::string_view term);

// Lowercase and split on non-alphanumeric characters. Drops stopwords and
// tokens shorter than two characters. Order and duplicates are preserved.
std::vector<std::string> Tokenize(std::string_view text, const StopwordSet& stopwords);

// One word per line; blank lines and '#' comments are skipped.
StopwordSet ReadStopwords(std::istream& in);

std::vector<std::string> SplitTabs(std::string_view line);
std::vector<std::string> SplitWhitespace(std::string_view line);
std::string_view Trim(std::string_view s);

// Formats a double so that it parses back to the identical value.
std::string FormatDouble(double value);

}  // namespace sitnet

#endif  // SITNET_TEXT_H_

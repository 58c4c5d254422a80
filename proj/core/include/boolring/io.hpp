#pragma once

// JSON encodings of the library's values.
//
//   matrix     {"rows", "cols", "width", "cells": [[bits, ...], ...]}
//   modus      [bits, ...]
//   pairs      [[i, j], ...]            1-based text indices
//   witness    {"l", "r", "left", "right", "method"}
//   transform  {"name", "set", "clear", "flip"}

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "boolring/cluster.hpp"
#include "boolring/module.hpp"
#include "boolring/transform.hpp"
#include "boolring/zerodiv.hpp"

namespace boolring::io {

nlohmann::json to_json(const Modus& v);
Modus modus_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BrMatrix& m);
BrMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PairList& pairs);
PairList pairs_from_json(const nlohmann::json& j, std::size_t text_count);

/// Text ids are taken from `names` when given, otherwise 1-based indices.
nlohmann::json to_json(const ClusterWitness& w, std::string_view method,
                       std::span<const std::string> names = {});

nlohmann::json to_json(const TransformSpec& spec);
TransformSpec transform_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KernelBasis& kernel);
nlohmann::json to_json(const ComplexityReport& report);

nlohmann::json search_report(const SearchStats& stats, std::uint64_t wall_ms,
                             std::span<const std::string> names = {});

}  // namespace boolring::io

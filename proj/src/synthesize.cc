// Copyright 2026 The Cohesia Authors.
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

#include "cohesia/synthesize.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "cohesia/error.h"
#include "cohesia/ingest.h"

namespace cohesia {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }

  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

std::vector<const Argument*> ByRole(const Predication& p) {
  std::vector<const Argument*> args;
  for (const Argument& a : p.args) args.push_back(&a);
  std::stable_sort(args.begin(), args.end(),
                   [](const Argument* x, const Argument* y) { return x->role < y->role; });
  return args;
}

// Joins rendered items: a complete sentence is followed by a space, a phrase
// by "; " before another phrase or ". " before a sentence.
std::string JoinItems(const std::vector<const RenderedFragment*>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    out += items[i]->text;
    const bool last = i + 1 == items.size();
    if (items[i]->complete) {
      if (!last) out += ' ';
    } else if (last) {
      out += '.';
    } else {
      out += items[i + 1]->complete ? ". " : "; ";
    }
  }
  return out;
}

}  // namespace

SummaryFormat ParseSummaryFormat(std::string_view name) {
  if (name == "running") return SummaryFormat::kRunning;
  if (name == "headed") return SummaryFormat::kHeaded;
  throw InvalidArgumentError("unknown summary format \"" + std::string(name) +
                             "\" (expected running or headed)");
}

std::string_view SummaryFormatName(SummaryFormat format) {
  return format == SummaryFormat::kHeaded ? "headed" : "running";
}

std::vector<TopicCluster> Cluster(const Selection& selection,
                                  const CohesionGraph& graph) {
  std::vector<const Predication*> members;
  for (int id : selection.node_ids) members.push_back(&graph.nodes()[graph.IndexOf(id)]);
  DisjointSets sets(members.size());
  std::map<std::string, size_t> first_with_head;
  for (size_t i = 0; i < members.size(); ++i) {
    for (const Argument& a : members[i]->args) {
      if (a.head.empty()) continue;
      auto [it, inserted] = first_with_head.emplace(a.head, i);
      if (!inserted) sets.Union(it->second, i);
    }
  }
  std::map<size_t, std::vector<const Predication*>> groups;
  for (size_t i = 0; i < members.size(); ++i) groups[sets.Find(i)].push_back(members[i]);

  std::vector<TopicCluster> clusters;
  std::vector<std::pair<size_t, int>> order_keys;
  for (auto& [root, group] : groups) {
    std::sort(group.begin(), group.end(), [](const Predication* x, const Predication* y) {
      return std::pair(x->sentence_index, x->id) < std::pair(y->sentence_index, y->id);
    });
    std::map<std::string, int> counts;
    for (const Predication* p : group) {
      for (const Argument& a : p->args) {
        if (!a.head.empty()) ++counts[a.head];
      }
    }
    TopicCluster c;
    int best = 0;
    for (const auto& [head, count] : counts) {  // Alphabetical.
      if (count > best) {
        best = count;
        c.label = head;
      }
    }
    if (c.label.empty()) c.label = group.front()->predicate.value_or("topic");
    int min_id = group.front()->id;
    for (const Predication* p : group) {
      c.members.push_back(p->id);
      min_id = std::min(min_id, p->id);
    }
    order_keys.emplace_back(group.front()->sentence_index, min_id);
    clusters.push_back(std::move(c));
  }
  std::vector<size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return order_keys[x] < order_keys[y]; });
  std::vector<TopicCluster> sorted;
  for (size_t i : order) sorted.push_back(std::move(clusters[i]));
  return sorted;
}

std::string RenderPredication(const Predication& p) {
  std::vector<std::string> words;
  const auto args = ByRole(p);
  size_t next = 0;
  if (p.complete) {
    if (!args.empty() && args.front()->role == 0) {
      const Argument& a = *args[next++];
      words.push_back(a.surface.empty() ? a.head : a.surface);
    }
    words.push_back(*p.predicate);
    for (; next < args.size(); ++next) {
      words.push_back(args[next]->surface.empty() ? args[next]->head : args[next]->surface);
    }
    std::string out;
    for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out + ".";
  }
  if (!args.empty() && args.front()->role == 0) {
    if (!args[next]->head.empty()) words.push_back(args[next]->head);
    ++next;
  }
  if (p.predicate) words.push_back(*p.predicate);
  for (; next < args.size(); ++next) {
    if (!args[next]->head.empty()) words.push_back(args[next]->head);
  }
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

SummaryOutput Render(const std::vector<TopicCluster>& clusters,
                     const CohesionGraph& graph, SummaryFormat format,
                     std::string source_doc_id) {
  SummaryOutput out;
  out.format = format;
  out.source_doc_id = std::move(source_doc_id);
  for (size_t c = 0; c < clusters.size(); ++c) {
    out.cluster_labels.push_back(clusters[c].label);
    for (int id : clusters[c].members) {
      const Predication& p = graph.nodes()[graph.IndexOf(id)];
      std::string text = RenderPredication(p);
      if (text.empty()) continue;  // Nothing but unresolved pronouns.
      out.fragments.push_back({id, c, std::move(text), p.complete});
    }
  }
  return out;
}

std::string SummaryOutput::ToText() const {
  std::vector<std::vector<const RenderedFragment*>> per_cluster(cluster_labels.size());
  for (const RenderedFragment& f : fragments) per_cluster[f.cluster].push_back(&f);
  if (format == SummaryFormat::kRunning) {
    std::vector<const RenderedFragment*> all;
    for (const auto& items : per_cluster) all.insert(all.end(), items.begin(), items.end());
    return all.empty() ? std::string() : JoinItems(all) + "\n";
  }
  std::string text;
  for (size_t c = 0; c < per_cluster.size(); ++c) {
    if (per_cluster[c].empty()) continue;
    if (!text.empty()) text += '\n';
    text += "== " + cluster_labels[c] + " ==\n" + JoinItems(per_cluster[c]) + "\n";
  }
  return text;
}

size_t SummaryOutput::WordCount() const {
  size_t n = 0;
  for (const RenderedFragment& f : fragments) n += CountWords(f.text);
  return n;
}

size_t PredicationTokenCount(const Predication& p) {
  size_t n = p.predicate ? 1 : 0;
  for (const Argument& a : p.args) n += a.head.empty() ? 0 : 1;
  return n;
}

}  // namespace cohesia

// Copyright 2026 The bbcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bbcover/records.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bbcover/errors.h"

namespace bbcover {

using nlohmann::json;

namespace {

DistanceMethod parse_method(const std::string &name) {
    for (DistanceMethod m : {DistanceMethod::Enumeration, DistanceMethod::Coset, DistanceMethod::LiftDerived,
                             DistanceMethod::InformationSet}) {
        if (distance_method_name(m) == name) {
            return m;
        }
    }
    throw ParseError("unknown distance method '" + name + "'", 0);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw RefusalError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

DistanceSummary summarize(const DistanceResult &d) {
    return DistanceSummary{d.kind, d.value, d.w_max, d.method};
}

std::string ResultRecord::spec() const {
    return "l=" + std::to_string(l) + " m=" + std::to_string(m) + " A=" + A + " B=" + B;
}

ResultRecord record_for(const BBCode &code) {
    ResultRecord rec;
    rec.l = code.ctx().l;
    rec.m = code.ctx().m;
    rec.A = render(code.A());
    rec.B = render(code.B());
    rec.n = code.n();
    rec.k = code.k();
    return rec;
}

std::string record_to_json(const ResultRecord &rec) {
    // ordered_json keeps the key order stable across runs
    nlohmann::ordered_json j;
    j["l"] = rec.l;
    j["m"] = rec.m;
    j["A"] = rec.A;
    j["B"] = rec.B;
    j["n"] = rec.n;
    j["k"] = rec.k;
    if (rec.d) {
        j["d"] = {{"kind", distance_kind_name(rec.d->kind)},
                  {"value", rec.d->value},
                  {"w_max", rec.d->w_max},
                  {"method", distance_method_name(rec.d->method)}};
    }
    if (rec.h) {
        j["h"] = *rec.h;
    }
    if (rec.connected) {
        j["connected"] = *rec.connected;
    }
    if (rec.canonical) {
        j["canonical"] = *rec.canonical;
    }
    if (rec.base) {
        j["base"] = *rec.base;
    }
    if (rec.witness) {
        j["witness"] = *rec.witness;
    }
    return j.dump();
}

ResultRecord record_from_json(std::string_view text) {
    json j = parse_json(text);
    ResultRecord rec;
    try {
        rec.l = j.at("l").get<std::size_t>();
        rec.m = j.at("m").get<std::size_t>();
        rec.A = j.at("A").get<std::string>();
        rec.B = j.at("B").get<std::string>();
        rec.n = j.at("n").get<std::size_t>();
        rec.k = j.at("k").get<std::size_t>();
        if (j.contains("d")) {
            const json &d = j.at("d");
            DistanceSummary s;
            s.kind = parse_distance_kind(d.at("kind").get<std::string>());
            s.value = d.at("value").get<std::size_t>();
            s.w_max = d.at("w_max").get<std::size_t>();
            if (d.contains("method")) {
                s.method = parse_method(d.at("method").get<std::string>());
            }
            rec.d = s;
        }
        if (j.contains("h")) {
            rec.h = j.at("h").get<std::size_t>();
        }
        if (j.contains("connected")) {
            rec.connected = j.at("connected").get<bool>();
        }
        if (j.contains("canonical")) {
            rec.canonical = j.at("canonical").get<bool>();
        }
        if (j.contains("base")) {
            rec.base = j.at("base").get<std::string>();
        }
        if (j.contains("witness")) {
            rec.witness = j.at("witness").get<std::string>();
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad record: ") + e.what(), 0);
    }
    return rec;
}

std::string csv_header() {
    return "l,m,A,B,n,k,d_kind,d,w_max,d_method,h,connected,canonical,base";
}

std::string record_to_csv(const ResultRecord &rec) {
    auto b = [](const std::optional<bool> &v) -> std::string { return v ? (*v ? "true" : "false") : ""; };
    std::ostringstream out;
    out << rec.l << ',' << rec.m << ',' << rec.A << ',' << rec.B << ',' << rec.n << ',' << rec.k << ',';
    if (rec.d) {
        out << distance_kind_name(rec.d->kind) << ',' << rec.d->value << ',' << rec.d->w_max << ','
            << distance_method_name(rec.d->method);
    } else {
        out << ",,,";
    }
    out << ',' << (rec.h ? std::to_string(*rec.h) : "") << ',' << b(rec.connected) << ',' << b(rec.canonical) << ','
        << (rec.base ? "\"" + *rec.base + "\"" : "");
    return out.str();
}

FixtureTable parse_fixture_table(std::string_view text) {
    json j = parse_json(text);
    FixtureTable table;
    try {
        table.name = j.at("name").get<std::string>();
        table.description = j.value("description", "");
        table.base = j.at("base").get<std::string>();
        for (const json &r : j.at("rows")) {
            FixtureRow row;
            row.h = r.at("h").get<std::size_t>();
            row.spec = r.at("spec").get<std::string>();
            row.n = r.at("n").get<std::size_t>();
            row.k = r.at("k").get<std::size_t>();
            row.d = r.at("d").get<std::size_t>();
            row.d_kind = parse_distance_kind(r.value("d_kind", "exact"));
            table.rows.push_back(row);
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad fixture table: ") + e.what(), 0);
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const FixtureRow &a, const FixtureRow &b) { return a.h < b.h; });
    return table;
}

FixtureTable load_fixture_table(const std::string &path) {
    return parse_fixture_table(read_file(path));
}

std::vector<FixtureTable> load_fixture_dir(const std::string &dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        return {load_fixture_table(dir)};
    }
    std::vector<std::string> paths;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());
    std::vector<FixtureTable> out;
    for (const auto &p : paths) {
        out.push_back(load_fixture_table(p));
    }
    std::sort(out.begin(), out.end(), [](const FixtureTable &a, const FixtureTable &b) { return a.name < b.name; });
    return out;
}

std::vector<HistogramRow> load_histograms(const std::string &path) {
    json j = parse_json(read_file(path));
    std::vector<HistogramRow> out;
    try {
        for (const json &r : j.at("rows")) {
            HistogramRow row;
            row.base = r.at("base").get<std::string>();
            row.lt = r.at("lt").get<std::size_t>();
            row.mt = r.at("mt").get<std::size_t>();
            row.h = r.at("h").get<std::size_t>();
            for (const auto &[key, value] : r.at("histogram").items()) {
                row.histogram[std::stoul(key)] = value.get<std::size_t>();
            }
            out.push_back(row);
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad histogram file: ") + e.what(), 0);
    }
    return out;
}

std::string render_histogram(const std::map<std::size_t, std::size_t> &hist) {
    std::string out = "{";
    bool first = true;
    for (const auto &[k, count] : hist) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += std::to_string(k) + ":" + std::to_string(count);
    }
    return out + "}";
}

}  // namespace bbcover

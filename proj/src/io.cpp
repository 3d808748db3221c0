#include "graphcalc/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "graphcalc/errors.hpp"

namespace graphcalc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool skippable(const std::string& line) {
    const std::string t = strip(line);
    return t.empty() || t.front() == '#';
}

long parse_index(const std::string& field, long line_no) {
    const std::string t = strip(field);
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        throw ParseError("not an integer: \"" + t + "\"", line_no);
    }
    if (used != t.size())
        throw ParseError("trailing characters in index \"" + t + "\"", line_no);
    if (v < 0) throw ParseError("negative index " + t, line_no);
    return v;
}

double parse_double(const std::string& field, long line_no) {
    const std::string t = strip(field);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw ParseError("not a number: \"" + t + "\"", line_no);
    }
    if (used != t.size())
        throw ParseError("trailing characters in number \"" + t + "\"",
                         line_no);
    return v;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return in;
}

}  // namespace

EdgeList load_edge_list(const std::string& path) {
    std::ifstream in = open_input(path);
    EdgeList el;
    std::string line;
    long line_no = 0;
    long max_index = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        const auto fields = split(strip(line), '\t');
        if (fields.size() != 3)
            throw ParseError("expected i<TAB>j<TAB>omega, got " +
                             std::to_string(fields.size()) + " field(s)",
                             line_no);
        const long i = parse_index(fields[0], line_no);
        const long j = parse_index(fields[1], line_no);
        const double w = parse_double(fields[2], line_no);
        max_index = std::max({max_index, i, j});
        el.edges.push_back({static_cast<int>(i), static_cast<int>(j), w});
    }
    el.n = static_cast<int>(max_index + 1);
    return el;
}

std::map<int, double> load_measure(const std::string& path) {
    std::ifstream in = open_input(path);
    std::map<int, double> mu;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        const auto fields = split(strip(line), '\t');
        if (fields.size() != 2)
            throw ParseError("expected i<TAB>mu, got " +
                             std::to_string(fields.size()) + " field(s)",
                             line_no);
        const long i = parse_index(fields[0], line_no);
        const double v = parse_double(fields[1], line_no);
        if (!mu.emplace(static_cast<int>(i), v).second)
            throw ParseError("duplicate measure for node " + std::to_string(i),
                             line_no);
    }
    return mu;
}

Eigen::MatrixXd load_matrix_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        const auto fields = split(strip(line), ',');
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_double(f, line_no));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) +
                             " columns, expected " +
                             std::to_string(rows.front().size()),
                             line_no);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix file " + path, 0);
    Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                rows[i][j];
    return x;
}

WeightedGraph load_graph(const std::string& edge_path,
                         const std::optional<std::string>& measure_path,
                         const std::optional<Preset>& preset) {
    if (measure_path && preset)
        throw PreconditionViolated(
            "measure file and preset are mutually exclusive");
    if (!measure_path && !preset)
        throw MissingMeasure("provide a measure file or a preset");

    EdgeList el = load_edge_list(edge_path);
    if (preset) {
        Topology topo;
        topo.n = el.n;
        topo.edges.reserve(el.edges.size());
        for (const auto& e : el.edges) topo.edges.emplace_back(e.u, e.v);
        return preset_graph(topo, *preset);
    }

    const std::map<int, double> mu_map = load_measure(*measure_path);
    int n = el.n;
    if (!mu_map.empty()) n = std::max(n, mu_map.rbegin()->first + 1);
    std::vector<double> mu(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto it = mu_map.find(i);
        if (it == mu_map.end())
            throw MissingMeasure("node " + std::to_string(i) +
                                 " has no measure entry");
        mu[static_cast<std::size_t>(i)] = it->second;
    }
    return build_graph(n, el.edges, std::move(mu));
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void atomic_write_text(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << text;
        out.flush();
        if (!out) throw IoError("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        const std::string why = std::strerror(errno);
        std::remove(tmp.c_str());
        throw IoError("rename " + tmp + " -> " + path + " failed: " + why);
    }
}

void save_edge_list(const WeightedGraph& g, const std::string& path) {
    std::ostringstream out;
    for (int i = 0; i < g.node_count(); ++i) {
        const auto nbrs = g.neighbors(i);
        const auto wts = g.weights(i);
        for (std::size_t k = 0; k < nbrs.size(); ++k)
            if (i < nbrs[k])
                out << i << '\t' << nbrs[k] << '\t' << fmt(wts[k]) << '\n';
    }
    atomic_write_text(path, out.str());
}

void save_measure(const WeightedGraph& g, const std::string& path) {
    std::ostringstream out;
    for (int i = 0; i < g.node_count(); ++i)
        out << i << '\t' << fmt(g.mu(i)) << '\n';
    atomic_write_text(path, out.str());
}

void save_matrix_csv(const Eigen::MatrixXd& x, const std::string& path) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            if (j) out << ',';
            out << fmt(x(i, j));
        }
        out << '\n';
    }
    atomic_write_text(path, out.str());
}

Preset parse_preset(const std::string& name) {
    if (name == "adj") return Preset::adj;
    if (name == "adj_selfloop") return Preset::adj_selfloop;
    if (name == "rw") return Preset::rw;
    if (name == "rw_selfloop") return Preset::rw_selfloop;
    throw ParseError("unknown preset \"" + name + "\"", 0);
}

}  // namespace graphcalc

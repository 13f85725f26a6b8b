// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pointsp {

namespace {

bool parse_double(const std::string& token, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(token, &used);
        return used == token.size() && std::isfinite(out);
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string tok;
    while (stream >> tok) tokens.push_back(tok);
    return tokens;
}

void append_row(PointCloud& cloud, const std::vector<std::string>& tokens, long line_no,
                bool with_normals, bool& norm_warning) {
    double v[6] = {0, 0, 0, 0, 0, 0};
    for (std::size_t c = 0; c < tokens.size(); ++c) {
        if (!parse_double(tokens[c], v[c])) {
            throw ParseError("expected a finite number, got '" + tokens[c] + "'", line_no);
        }
    }
    cloud.points.emplace_back(v[0], v[1], v[2]);
    if (with_normals) {
        Eigen::Vector3d n(v[3], v[4], v[5]);
        const double norm = n.norm();
        if (norm < 1e-9) throw ParseError("zero-length normal", line_no);
        if (std::abs(norm - 1.0) > 1e-3) norm_warning = true;
        cloud.normals.push_back(n / norm);
    }
}

PointCloud load_xyz(std::istream& in) {
    PointCloud cloud;
    std::string line;
    long line_no = 0;
    int columns = 0;
    bool norm_warning = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (columns == 0) {
            if (tokens.size() != 3 && tokens.size() != 6) {
                throw ParseError("expected 3 or 6 columns, got " + std::to_string(tokens.size()),
                                 line_no);
            }
            columns = static_cast<int>(tokens.size());
        } else if (static_cast<int>(tokens.size()) != columns) {
            throw ParseError("row has " + std::to_string(tokens.size()) + " columns, file uses " +
                                 std::to_string(columns),
                             line_no);
        }
        append_row(cloud, tokens, line_no, columns == 6, norm_warning);
    }
    if (cloud.empty()) throw ParseError("file contains no points");
    if (norm_warning) {
        std::cerr << "warning: some normals deviated from unit length by more than 1e-3; "
                     "re-normalized on load\n";
    }
    return cloud;
}

PointCloud load_ply(std::istream& in) {
    std::string line;
    long line_no = 0;

    auto next_line = [&](const char* what) {
        if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of PLY ") + what, line_no);
        ++line_no;
    };

    next_line("magic");
    if (line != "ply") throw ParseError("not a PLY file (missing 'ply' magic)", line_no);
    next_line("format");
    if (line.rfind("format ascii 1.0", 0) != 0) {
        throw ParseError("only 'format ascii 1.0' is supported", line_no);
    }

    long vertex_count = -1;
    std::vector<std::string> properties;
    while (true) {
        next_line("header");
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "comment") continue;
        if (tokens[0] == "end_header") break;
        if (tokens[0] == "element") {
            if (tokens.size() != 3 || tokens[1] != "vertex") {
                throw ParseError("only a vertex element is supported", line_no);
            }
            vertex_count = std::stol(tokens[2]);
        } else if (tokens[0] == "property") {
            if (tokens.size() != 3) throw ParseError("malformed property", line_no);
            properties.push_back(tokens[2]);
        } else {
            throw ParseError("unsupported header line '" + tokens[0] + "'", line_no);
        }
    }
    if (vertex_count < 1) throw ParseError("PLY has no vertices", line_no);

    const std::vector<std::string> xyz = {"x", "y", "z"};
    const std::vector<std::string> xyzn = {"x", "y", "z", "nx", "ny", "nz"};
    bool with_normals = false;
    if (properties == xyzn) {
        with_normals = true;
    } else if (properties != xyz) {
        throw ParseError("vertex properties must be x y z [nx ny nz]", line_no);
    }

    PointCloud cloud;
    cloud.points.reserve(static_cast<std::size_t>(vertex_count));
    bool norm_warning = false;
    for (long i = 0; i < vertex_count; ++i) {
        next_line("vertex data");
        const auto tokens = split_ws(line);
        if (tokens.size() != properties.size()) {
            throw ParseError("vertex row has " + std::to_string(tokens.size()) +
                                 " values, header declares " + std::to_string(properties.size()),
                             line_no);
        }
        append_row(cloud, tokens, line_no, with_normals, norm_warning);
    }
    if (norm_warning) {
        std::cerr << "warning: some normals deviated from unit length by more than 1e-3; "
                     "re-normalized on load\n";
    }
    return cloud;
}

void write_value(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    out << buf;
}

void write_row(std::ostream& out, const PointCloud& cloud, int i) {
    const auto& p = cloud.points[static_cast<std::size_t>(i)];
    write_value(out, p.x());
    out << ' ';
    write_value(out, p.y());
    out << ' ';
    write_value(out, p.z());
    if (cloud.has_normals()) {
        const auto& n = cloud.normals[static_cast<std::size_t>(i)];
        for (int a = 0; a < 3; ++a) {
            out << ' ';
            write_value(out, n[a]);
        }
    }
    out << '\n';
}

} // namespace

CloudFormat cloud_format_from_string(const std::string& name) {
    if (name == "xyz") return CloudFormat::xyz;
    if (name == "ply" || name == "ply_ascii") return CloudFormat::ply_ascii;
    throw ParameterError("unknown cloud format: " + name);
}

PointCloud load_cloud(const std::filesystem::path& path, CloudFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    PointCloud cloud = format == CloudFormat::xyz ? load_xyz(in) : load_ply(in);
    validate_cloud(cloud);
    return cloud;
}

void save_cloud(const PointCloud& cloud, const std::filesystem::path& path, CloudFormat format) {
    validate_cloud(cloud); // rejects empty clouds
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path.string());

    if (format == CloudFormat::ply_ascii) {
        out << "ply\nformat ascii 1.0\nelement vertex " << cloud.size() << "\n"
            << "property double x\nproperty double y\nproperty double z\n";
        if (cloud.has_normals()) {
            out << "property double nx\nproperty double ny\nproperty double nz\n";
        }
        out << "end_header\n";
    }
    for (int i = 0; i < cloud.size(); ++i) write_row(out, cloud, i);
    if (!out) throw ParameterError("write failed for " + path.string());
}

void save_column(const std::vector<double>& values, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path.string());
    for (const double v : values) {
        write_value(out, v);
        out << '\n';
    }
}

void save_indices(const std::vector<int>& indices, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path.string());
    for (const int i : indices) out << i << '\n';
}

std::vector<int> load_indices(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::vector<int> indices;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 1) throw ParseError("expected one index per line", line_no);
        try {
            indices.push_back(std::stoi(tokens[0]));
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + tokens[0] + "'", line_no);
        }
    }
    return indices;
}

std::vector<CorruptionSpec> load_corruption_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::vector<CorruptionSpec> specs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 3) {
            throw ParseError("manifest line must be 'family severity seed'", line_no);
        }
        CorruptionSpec spec;
        try {
            spec.family = corruption_family_from_string(tokens[0]);
            spec.severity = std::stoi(tokens[1]);
            spec.seed = std::stoull(tokens[2]);
        } catch (const ParameterError& e) {
            throw ParseError(e.what(), line_no);
        } catch (const std::exception&) {
            throw ParseError("malformed manifest entry", line_no);
        }
        specs.push_back(spec);
    }
    return specs;
}

} // namespace pointsp

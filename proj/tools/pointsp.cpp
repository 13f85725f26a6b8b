// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// pointsp command line tool: weights, key point sampling, resampling,
// corruption fixtures, the full protocol pipelines, and metric reports.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "pointsp/corruption.hpp"
#include "pointsp/io.hpp"
#include "pointsp/metrics.hpp"
#include "pointsp/pipeline.hpp"
#include "pointsp/resample.hpp"
#include "pointsp/rng.hpp"

namespace {

// Exit codes: 0 success, 2 bad parameters/flags, 3 malformed input files,
// 4 degenerate geometry.
constexpr int kExitParameter = 2;
constexpr int kExitParse = 3;
constexpr int kExitDegenerate = 4;

struct CommonOptions {
    pointsp::ProtocolConfig cfg;
    std::string format = "xyz";
    std::string start_rule = "max_centroid_distance_unmasked";
};

void add_protocol_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--k", opt.cfg.k, "Neighbor count")->capture_default_str();
    cmd->add_option("--omega", opt.cfg.omega, "FFPS quantile threshold in (0,1]")
        ->capture_default_str();
    cmd->add_option("--rho", opt.cfg.rho, "Training size-jitter fraction in [0,1)")
        ->capture_default_str();
    cmd->add_option("--target-n", opt.cfg.target_n, "Canonical cloud size")
        ->capture_default_str();
    cmd->add_option("--m", opt.cfg.m, "Key point count")->capture_default_str();
    cmd->add_option("--seed", opt.cfg.seed, "Random seed")->capture_default_str();
    cmd->add_option("--start-rule", opt.start_rule,
                    "FPS start policy: first_unmasked | max_centroid_distance_unmasked")
        ->capture_default_str();
    cmd->add_option("--format", opt.format, "Cloud file format: xyz | ply")
        ->capture_default_str();
}

pointsp::PointCloud load(const std::string& path, const std::string& format) {
    return pointsp::load_cloud(path, pointsp::cloud_format_from_string(format));
}

void save(const pointsp::PointCloud& cloud, const std::string& path, const std::string& format) {
    pointsp::save_cloud(cloud, path, pointsp::cloud_format_from_string(format));
}

pointsp::PointCloud select_subcloud(const pointsp::PointCloud& cloud,
                                    const std::vector<int>& indices) {
    pointsp::PointCloud out;
    out.points.reserve(indices.size());
    if (cloud.has_normals()) out.normals.reserve(indices.size());
    for (const int i : indices) {
        out.points.push_back(cloud.points[static_cast<std::size_t>(i)]);
        if (cloud.has_normals()) out.normals.push_back(cloud.normals[static_cast<std::size_t>(i)]);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"pointsp: outlier-aware point cloud sampling and resampling"};
    app.require_subcommand(1);

    CommonOptions opt;

    // weights: isolation rates (and optionally the filter mask) to files.
    auto* weights_cmd = app.add_subcommand("weights", "Compute per-point isolation rates");
    std::string weights_input, weights_output, mask_output;
    weights_cmd->add_option("--input", weights_input, "Input cloud")->required();
    weights_cmd->add_option("--output", weights_output, "Isolation rates, one per line")
        ->required();
    weights_cmd->add_option("--mask-output", mask_output, "Filter mask, one 0/1 per line");
    add_protocol_flags(weights_cmd, opt);

    // sample: key point selection.
    auto* sample_cmd = app.add_subcommand("sample", "Select key points");
    std::string sample_input, sample_method = "ffps", indices_output, subcloud_output;
    int explicit_start = -1;
    sample_cmd->add_option("--input", sample_input, "Input cloud")->required();
    sample_cmd->add_option("--method", sample_method, "fps | ffps | sws")
        ->capture_default_str();
    sample_cmd->add_option("--indices-output", indices_output, "Selected indices, one per line")
        ->required();
    sample_cmd->add_option("--cloud-output", subcloud_output, "Optional selected sub-cloud");
    sample_cmd->add_option("--start", explicit_start,
                           "Explicit FPS start index (default: from --start-rule)");
    add_protocol_flags(sample_cmd, opt);

    // resample: size adjustment.
    auto* resample_cmd = app.add_subcommand("resample", "Resample a cloud to a target size");
    std::string resample_input, resample_output, resample_mode = "inference";
    resample_cmd->add_option("--input", resample_input, "Input cloud")->required();
    resample_cmd->add_option("--output", resample_output, "Output cloud")->required();
    resample_cmd->add_option("--mode", resample_mode,
                             "inference (upsample to --target-n) | train (random size jitter)")
        ->capture_default_str();
    add_protocol_flags(resample_cmd, opt);

    // corrupt: fixture generation.
    auto* corrupt_cmd = app.add_subcommand("corrupt", "Apply a synthetic corruption");
    std::string corrupt_input, corrupt_output, corrupt_family = "jitter", manifest_path,
                output_dir;
    int severity = 1;
    corrupt_cmd->add_option("--input", corrupt_input, "Input cloud")->required();
    corrupt_cmd->add_option("--family", corrupt_family,
                            "scale | jitter | drop_global | drop_local | add_global | "
                            "add_local | rotate")
        ->capture_default_str();
    corrupt_cmd->add_option("--severity", severity, "Severity level 1..5")->capture_default_str();
    corrupt_cmd->add_option("--output", corrupt_output, "Output cloud");
    corrupt_cmd->add_option("--manifest", manifest_path,
                            "Batch manifest: one 'family severity seed' per line");
    corrupt_cmd->add_option("--output-dir", output_dir, "Output directory for batch mode");
    add_protocol_flags(corrupt_cmd, opt);

    // pipeline: the end-to-end protocol.
    auto* pipeline_cmd = app.add_subcommand("pipeline", "Run the full sampling protocol");
    std::string pipe_input, pipe_mode = "inference", pipe_cloud_out, pipe_indices_out,
                pipe_weights_out;
    pipeline_cmd->add_option("--input", pipe_input, "Input cloud")->required();
    pipeline_cmd->add_option("--mode", pipe_mode, "inference | train")->capture_default_str();
    pipeline_cmd->add_option("--cloud-output", pipe_cloud_out, "Prepared cloud")->required();
    pipeline_cmd->add_option("--indices-output", pipe_indices_out, "Key point indices")
        ->required();
    pipeline_cmd->add_option("--weights-output", pipe_weights_out,
                             "Isolation rates of the prepared cloud (inference mode)");
    add_protocol_flags(pipeline_cmd, opt);

    // eval: metric report.
    auto* eval_cmd = app.add_subcommand("eval", "Report metrics between two clouds");
    std::string eval_clean, eval_processed, eval_indices, eval_outliers, eval_csv;
    eval_cmd->add_option("--clean", eval_clean, "Reference cloud")->required();
    eval_cmd->add_option("--processed", eval_processed, "Processed cloud")->required();
    eval_cmd->add_option("--indices", eval_indices, "Selected key point indices");
    eval_cmd->add_option("--outlier-manifest", eval_outliers,
                         "Indices of known outliers in the processed cloud");
    eval_cmd->add_option("--csv", eval_csv, "Also write the report as CSV");
    add_protocol_flags(eval_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help/usage text
        return code == 0 ? 0 : kExitParameter;
    }
    opt.cfg.start_rule = pointsp::start_rule_from_string(opt.start_rule);

    if (weights_cmd->parsed()) {
        const auto cloud = load(weights_input, opt.format);
        const auto graph = pointsp::build_neighbor_graph(
            cloud, std::min(opt.cfg.k, cloud.size() - 1));
        auto wv = pointsp::isolation_rates(graph);
        pointsp::save_column(wv.isolation, weights_output);
        if (!mask_output.empty()) {
            wv = pointsp::filter_mask(std::move(wv), opt.cfg.omega);
            std::vector<int> mask(wv.mask.begin(), wv.mask.end());
            pointsp::save_indices(mask, mask_output);
        }
        return 0;
    }

    if (sample_cmd->parsed()) {
        const auto cloud = load(sample_input, opt.format);
        pointsp::SampleResult result;
        if (sample_method == "fps") {
            const int start = explicit_start >= 0
                                  ? explicit_start
                                  : pointsp::resolve_start(cloud, nullptr, opt.cfg.start_rule);
            result = pointsp::fps(cloud, opt.cfg.m, start);
        } else {
            const auto graph = pointsp::build_neighbor_graph(
                cloud, std::min(opt.cfg.k, cloud.size() - 1));
            auto wv = pointsp::isolation_rates(graph);
            if (sample_method == "ffps") {
                wv = pointsp::filter_mask(std::move(wv), opt.cfg.omega);
                result = explicit_start >= 0
                             ? pointsp::ffps(cloud, wv, opt.cfg.m, explicit_start)
                             : pointsp::ffps(cloud, wv, opt.cfg.m, opt.cfg.start_rule);
            } else if (sample_method == "sws") {
                wv = pointsp::sampling_weights(std::move(wv));
                result = pointsp::sws(cloud, wv, opt.cfg.m, opt.cfg.seed);
            } else {
                throw pointsp::ParameterError("unknown sampling method: " + sample_method);
            }
        }
        pointsp::save_indices(result.indices, indices_output);
        if (!subcloud_output.empty()) {
            save(select_subcloud(cloud, result.indices), subcloud_output, opt.format);
        }
        return 0;
    }

    if (resample_cmd->parsed()) {
        const auto cloud = load(resample_input, opt.format);
        pointsp::PointCloud out;
        if (resample_mode == "inference") {
            out = pointsp::inference_resample(cloud, opt.cfg.target_n, opt.cfg.seed, opt.cfg.k);
        } else if (resample_mode == "train") {
            out = pointsp::train_resample(cloud, opt.cfg.rho, opt.cfg.seed, opt.cfg.k);
        } else {
            throw pointsp::ParameterError("unknown resample mode: " + resample_mode);
        }
        save(out, resample_output, opt.format);
        return 0;
    }

    if (corrupt_cmd->parsed()) {
        const auto cloud = load(corrupt_input, opt.format);
        if (!manifest_path.empty()) {
            if (output_dir.empty()) {
                throw pointsp::ParameterError("batch corruption needs --output-dir");
            }
            std::filesystem::create_directories(output_dir);
            const auto specs = pointsp::load_corruption_manifest(manifest_path);
            for (std::size_t i = 0; i < specs.size(); ++i) {
                const auto& spec = specs[i];
                const std::string name = pointsp::to_string(spec.family) + "_s" +
                                         std::to_string(spec.severity) + "_" +
                                         std::to_string(spec.seed) + "." +
                                         (opt.format == "ply" ? "ply" : opt.format);
                save(pointsp::corrupt(cloud, spec),
                     (std::filesystem::path(output_dir) / name).string(), opt.format);
            }
            return 0;
        }
        if (corrupt_output.empty()) {
            throw pointsp::ParameterError("corrupt needs --output (or --manifest/--output-dir)");
        }
        pointsp::CorruptionSpec spec;
        spec.family = pointsp::corruption_family_from_string(corrupt_family);
        spec.severity = severity;
        spec.seed = opt.cfg.seed;
        save(pointsp::corrupt(cloud, spec), corrupt_output, opt.format);
        return 0;
    }

    if (pipeline_cmd->parsed()) {
        const auto cloud = load(pipe_input, opt.format);
        if (pipe_mode == "inference") {
            const auto result = pointsp::run_inference_pipeline(cloud, opt.cfg);
            save(result.prepared, pipe_cloud_out, opt.format);
            pointsp::save_indices(result.keypoints.indices, pipe_indices_out);
            if (!pipe_weights_out.empty()) {
                pointsp::save_column(result.weights.isolation, pipe_weights_out);
            }
        } else if (pipe_mode == "train") {
            const auto result = pointsp::run_training_pipeline(cloud, opt.cfg);
            save(result.prepared, pipe_cloud_out, opt.format);
            pointsp::save_indices(result.keypoints.indices, pipe_indices_out);
            if (!pipe_weights_out.empty()) {
                throw pointsp::ParameterError("--weights-output applies to inference mode only");
            }
        } else {
            throw pointsp::ParameterError("unknown pipeline mode: " + pipe_mode);
        }
        return 0;
    }

    if (eval_cmd->parsed()) {
        const auto clean = load(eval_clean, opt.format);
        const auto processed = load(eval_processed, opt.format);
        pointsp::MetricsReport report;
        if (!eval_indices.empty() && !eval_outliers.empty()) {
            report = pointsp::report_metrics(clean, processed,
                                             pointsp::load_indices(eval_indices),
                                             pointsp::load_indices(eval_outliers));
        } else if (eval_indices.empty() != eval_outliers.empty()) {
            throw pointsp::ParameterError(
                "--indices and --outlier-manifest must be given together");
        } else {
            report = pointsp::report_metrics(clean, processed);
        }
        std::cout << pointsp::to_key_value(report);
        if (!eval_csv.empty()) {
            std::ofstream csv(eval_csv);
            if (!csv) throw pointsp::ParameterError("cannot write " + eval_csv);
            csv << pointsp::to_csv(report);
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pointsp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const pointsp::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const pointsp::DegenerateGeometryError& e) {
        std::cerr << "degenerate geometry: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

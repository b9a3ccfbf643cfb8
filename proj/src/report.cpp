// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "ndotp/experiments.hpp"

namespace ndotp {

namespace {

// Locale-independent fixed formatting so output bytes depend only on values.
std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double log60(double rate) { return std::log(rate) / std::log(60.0); }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;

}  // namespace

std::string render_csv(const Histogram& h) {
  std::string out = "bin,count,rate,log60_rate\n";
  for (std::size_t b = 0; b < h.bins(); ++b) {
    const double r = h.rate(b);
    out += std::to_string(h.label(b)) + ',' + std::to_string(h.count(b)) + ',' +
           fmt("%.10g", r) + ',' + (r > 0 ? fmt("%.6f", log60(r)) : "-inf") +
           '\n';
  }
  return out;
}

std::string render_svg(const Histogram& h, const SvgOptions& options) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t bins = std::max<std::size_t>(h.bins(), 1);
  const double slot = plot_w / static_cast<double>(bins);

  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
      "viewBox=\"0 0 640 400\">\n"
      "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         xml_escape(options.title) + "</text>\n";
  out += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" +
         fmt("%.2f", kTop + plot_h) + "\" x2=\"" + fmt("%.2f", kLeft + plot_w) +
         "\" y2=\"" + fmt("%.2f", kTop + plot_h) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kTop) +
         "\" x2=\"" + fmt("%.2f", kLeft) + "\" y2=\"" +
         fmt("%.2f", kTop + plot_h) + "\" stroke=\"black\"/>\n";
  out += "<text x=\"320\" y=\"390\" text-anchor=\"middle\" font-size=\"12\">" +
         xml_escape(options.x_label) + "</text>\n";

  auto x_center = [&](std::size_t b) {
    return kLeft + slot * (static_cast<double>(b) + 0.5);
  };
  auto x_tick = [&](std::size_t b) {
    out += "<text x=\"" + fmt("%.2f", x_center(b)) + "\" y=\"" +
           fmt("%.2f", kTop + plot_h + 16) +
           "\" text-anchor=\"middle\" font-size=\"10\">" +
           std::to_string(h.label(b)) + "</text>\n";
  };
  const std::size_t tick_every = std::max<std::size_t>(1, bins / 10);

  if (!options.log60) {
    std::uint64_t peak = 1;
    for (std::size_t b = 0; b < h.bins(); ++b) peak = std::max(peak, h.count(b));
    for (std::size_t b = 0; b < h.bins(); ++b) {
      const double bar = plot_h * static_cast<double>(h.count(b)) /
                         static_cast<double>(peak);
      out += "<rect x=\"" + fmt("%.2f", kLeft + slot * b + slot * 0.1) +
             "\" y=\"" + fmt("%.2f", kTop + plot_h - bar) + "\" width=\"" +
             fmt("%.2f", slot * 0.8) + "\" height=\"" + fmt("%.2f", bar) +
             "\" fill=\"steelblue\"/>\n";
      if (b % tick_every == 0) x_tick(b);
    }
    out += "<text x=\"" + fmt("%.2f", kLeft - 6) + "\" y=\"" +
           fmt("%.2f", kTop + 4) +
           "\" text-anchor=\"end\" font-size=\"10\">" + std::to_string(peak) +
           "</text>\n";
    out += "</svg>\n";
    return out;
  }

  // log60 line plot: y axis from the smallest finite value up to 0.
  double floor_v = 0;
  for (std::size_t b = 0; b < h.bins(); ++b) {
    if (h.rate(b) > 0) floor_v = std::min(floor_v, log60(h.rate(b)));
  }
  for (double r : options.reference) {
    if (r > 0) floor_v = std::min(floor_v, log60(r));
  }
  floor_v = std::floor(floor_v) - (floor_v == 0 ? 1 : 0);
  auto y_of = [&](double v) { return kTop + plot_h * (v / floor_v); };

  auto polyline = [&](auto rate_at, std::size_t count, const char* colour) {
    std::string pts;
    for (std::size_t b = 0; b < count; ++b) {
      const double r = rate_at(b);
      if (r <= 0) continue;
      if (!pts.empty()) pts += ' ';
      pts += fmt("%.2f", x_center(b)) + ',' + fmt("%.2f", y_of(log60(r)));
    }
    out += std::string("<polyline fill=\"none\" stroke=\"") + colour +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  };
  polyline([&](std::size_t b) { return h.rate(b); }, h.bins(), "steelblue");
  if (!options.reference.empty()) {
    polyline([&](std::size_t b) { return options.reference[b]; },
             std::min(options.reference.size(), h.bins()), "red");
  }
  for (std::size_t b = 0; b < h.bins(); b += tick_every) x_tick(b);
  for (int v = 0; v >= static_cast<int>(floor_v); --v) {
    out += "<text x=\"" + fmt("%.2f", kLeft - 6) + "\" y=\"" +
           fmt("%.2f", y_of(v) + 4) +
           "\" text-anchor=\"end\" font-size=\"10\">" + std::to_string(v) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void emit_csv(const Histogram& h, const std::string& path) {
  write_file(path, render_csv(h));
}

void emit_svg(const Histogram& h, const std::string& path,
              const SvgOptions& options) {
  write_file(path, render_svg(h, options));
}

}  // namespace ndotp

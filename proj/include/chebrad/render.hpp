#pragma once

#include <string>

#include "chebrad/newton.hpp"

namespace chebrad {

struct RenderOptions {
    long max_width = 72;   // columns of plot area before truncation
    long max_height = 24;  // rows of plot area before truncation
};

/// Plain-text rendering of a principal polygon: axes, development points,
/// vertices, sides, and the counted lattice points, with a caption carrying
/// the vertex list and the index value. Wide polygons are truncated on the
/// right, with the end vertex noted in the caption.
std::string render_ascii(const NewtonPolygon& np, long deg_phi, const RenderOptions& = {});

/// Minimal standalone SVG with the same content.
std::string render_svg(const NewtonPolygon& np, long deg_phi, const RenderOptions& = {});

}  // namespace chebrad

#pragma once

namespace sgl {

/// Worker count: the requested value if positive, else SGL_NUM_THREADS, else
/// the OpenMP default. Always >= 1.
int resolve_workers(int requested);

}  // namespace sgl

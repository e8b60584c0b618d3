#ifndef HALOBRAID_HPP_
#define HALOBRAID_HPP_

#include "halobraid/config_space.hpp"
#include "halobraid/embedding.hpp"
#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"
#include "halobraid/halo.hpp"
#include "halobraid/io.hpp"
#include "halobraid/planarity.hpp"
#include "halobraid/raag.hpp"
#include "halobraid/subdivision.hpp"

#endif  // HALOBRAID_HPP_

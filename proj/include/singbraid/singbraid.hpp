#ifndef SINGBRAID_SINGBRAID_HPP
#define SINGBRAID_SINGBRAID_HPP

#include "singbraid/errors.hpp"
#include "singbraid/free_group.hpp"
#include "singbraid/invariants.hpp"
#include "singbraid/oracle.hpp"
#include "singbraid/presentation.hpp"
#include "singbraid/purebraid.hpp"
#include "singbraid/relations.hpp"
#include "singbraid/represent.hpp"
#include "singbraid/singquandle.hpp"
#include "singbraid/words.hpp"

#endif  // SINGBRAID_SINGBRAID_HPP

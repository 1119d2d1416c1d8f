#pragma once

#include "semiflat/scalar.hpp"
#include "semiflat/linalg.hpp"
#include "semiflat/exterior.hpp"
#include "semiflat/lie.hpp"
#include "semiflat/salamon.hpp"
#include "semiflat/su3.hpp"
#include "semiflat/mirror.hpp"
#include "semiflat/catalog.hpp"
#include "semiflat/cohomology.hpp"
#include "semiflat/fourier_mukai.hpp"
#include "semiflat/isomorphism.hpp"
#include "semiflat/serialize.hpp"
#include "semiflat/commands.hpp"

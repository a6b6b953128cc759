#ifndef PPOLY_PPOLY_HPP
#define PPOLY_PPOLY_HPP

#include <ppoly/arith.hpp>
#include <ppoly/bigint.hpp>
#include <ppoly/bounds.hpp>
#include <ppoly/certify.hpp>
#include <ppoly/construct.hpp>
#include <ppoly/egfinv.hpp>
#include <ppoly/errors.hpp>
#include <ppoly/interval.hpp>
#include <ppoly/io.hpp>
#include <ppoly/recur.hpp>
#include <ppoly/sequence.hpp>
#include <ppoly/transforms.hpp>

#endif // PPOLY_PPOLY_HPP

/* tlgkit: C++ threshold logic synthesis and locking toolkit
 * Copyright (C) 2025-2026  the tlgkit authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file cost_model.hpp
  \brief Abstract area, power, and delay estimates for threshold networks

  The model is deliberately coarse: per-gate linear terms in the
  weighted fanin for area and power, and a constant per logic level
  for delay.  Its job is to preserve orderings — between gate styles,
  between a network and its locked variant — not to predict silicon.
  Two calibrated styles ship by default: a latch-type gate and a
  charge-recycling gate whose coefficients sit at fixed fractions of
  the former (0.7 area, 0.8 power, 0.5 delay).
*/

#pragma once

#include "locking.hpp"
#include "tlg_network.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tlgkit
{

/*! \brief Linear per-gate cost coefficients for one circuit style. */
struct GateStyle
{
  std::string name;
  double area_base = 0.0;      //!< area per gate
  double area_per_fanin = 0.0; //!< area per unit of weighted fanin
  double power_base = 0.0;     //!< power per gate
  double power_per_fanin = 0.0;
  double delay_per_level = 0.0; //!< delay per logic level on the critical path

  /*! \brief All coefficients must be strictly positive. */
  void validate() const
  {
    if ( !( area_base > 0.0 ) || !( area_per_fanin > 0.0 ) || !( power_base > 0.0 ) ||
         !( power_per_fanin > 0.0 ) || !( delay_per_level > 0.0 ) )
    {
      throw std::invalid_argument( "gate style coefficients must be positive" );
    }
  }
};

/*! \brief Latch-type threshold gate coefficients, the reference style. */
inline GateStyle lctl_style()
{
  return { "LCTL", 4.0, 1.0, 2.0, 0.5, 2.0 };
}

/*! \brief Charge-recycling coefficients: 0.7 area, 0.8 power, 0.5 delay of LCTL. */
inline GateStyle crtl_style()
{
  return { "CRTL", 2.8, 0.7, 1.6, 0.4, 1.0 };
}

struct CostEstimate
{
  double area = 0.0;
  double power = 0.0;
  double delay = 0.0;
};

/*! \brief Longest input-to-output path in gate levels; 0 when empty. */
inline int network_depth( const TlgNetwork& net )
{
  std::unordered_map<std::string, int> level;
  level.reserve( net.inputs.size() + net.key_inputs.size() + net.gates.size() );
  for ( const auto& in : net.inputs )
  {
    level[in] = 0;
  }
  for ( const auto& k : net.key_inputs )
  {
    level[k] = 0;
  }
  for ( const auto& g : net.gates )
  {
    int deepest = 0;
    for ( const auto& in : g.inputs )
    {
      deepest = std::max( deepest, level.at( in.signal ) );
    }
    level[g.output] = deepest + 1;
  }
  int depth = 0;
  for ( const auto& out : net.outputs )
  {
    depth = std::max( depth, level.at( out ) );
  }
  return depth;
}

/*! \brief Deterministic cost proxy for a network under the given style.

  Area and power sum a base term plus a term linear in each gate's
  weighted fanin (the sum of absolute weights, key inputs included),
  and delay charges one level coefficient per gate on the critical
  path.  An empty network costs nothing.
*/
inline CostEstimate estimate( const TlgNetwork& net, const GateStyle& style )
{
  style.validate();
  CostEstimate cost;
  for ( const auto& g : net.gates )
  {
    const double fanin = static_cast<double>( g.weighted_fanin() );
    cost.area += style.area_base + style.area_per_fanin * fanin;
    cost.power += style.power_base + style.power_per_fanin * fanin;
  }
  cost.delay = style.delay_per_level * network_depth( net );
  return cost;
}

inline CostEstimate estimate( const LockedNetwork& locked, const GateStyle& style )
{
  return estimate( locked.network, style );
}

/*! \brief Reads `key = value` coefficient overrides on top of a base style.

  Blank lines and lines starting with `#` are skipped.  Recognized
  keys are `name`, `area_base`, `area_per_fanin`, `power_base`,
  `power_per_fanin`, and `delay_per_level`; anything else is an error,
  as is a malformed or nonpositive number.
*/
inline GateStyle parse_gate_style( std::istream& in, GateStyle base = lctl_style() )
{
  std::string line;
  int lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    const auto first = line.find_first_not_of( " \t\r" );
    if ( first == std::string::npos || line[first] == '#' )
    {
      continue;
    }
    const auto eq = line.find( '=' );
    if ( eq == std::string::npos )
    {
      throw std::invalid_argument( "style line " + std::to_string( lineno ) +
                                   ": expected key = value" );
    }
    auto trim = []( std::string s ) {
      const auto b = s.find_first_not_of( " \t\r" );
      const auto e = s.find_last_not_of( " \t\r" );
      return b == std::string::npos ? std::string{} : s.substr( b, e - b + 1 );
    };
    const std::string key = trim( line.substr( 0, eq ) );
    const std::string value = trim( line.substr( eq + 1 ) );
    if ( key == "name" )
    {
      base.name = value;
      continue;
    }
    double number = 0.0;
    std::istringstream num( value );
    if ( !( num >> number ) )
    {
      throw std::invalid_argument( "style line " + std::to_string( lineno ) +
                                   ": malformed number '" + value + "'" );
    }
    if ( key == "area_base" )
    {
      base.area_base = number;
    }
    else if ( key == "area_per_fanin" )
    {
      base.area_per_fanin = number;
    }
    else if ( key == "power_base" )
    {
      base.power_base = number;
    }
    else if ( key == "power_per_fanin" )
    {
      base.power_per_fanin = number;
    }
    else if ( key == "delay_per_level" )
    {
      base.delay_per_level = number;
    }
    else
    {
      throw std::invalid_argument( "style line " + std::to_string( lineno ) +
                                   ": unknown key '" + key + "'" );
    }
  }
  base.validate();
  return base;
}

} // namespace tlgkit

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
  \file blif_io.hpp
  \brief Reader for the combinational BLIF subset

  Handles .model/.inputs/.outputs/.names/.end with `\` line continuation and
  `#` comments.  Each .names cover is decomposed into AND/OR/NOT/BUF/NAND/NOR
  primitives: one cube becomes an AND over (possibly inverted) literals,
  several cubes are joined by an OR, and off-set covers (output column 0)
  complement the top gate.  Inverters are shared per source signal.
*/

#pragma once

#include "bool_circuit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tlgkit
{

namespace detail
{

struct BlifRow
{
  std::string plane; //!< one char per input: '0', '1', or '-'
  bool out;
  int line;
};

struct BlifNames
{
  std::vector<std::string> fanins;
  std::string output;
  std::vector<BlifRow> rows;
  int line;
};

inline std::vector<std::string> split_tokens( const std::string& s )
{
  std::vector<std::string> toks;
  std::stringstream ss( s );
  std::string t;
  while ( ss >> t )
  {
    toks.push_back( t );
  }
  return toks;
}

} // namespace detail

/*! \brief Parses BLIF text into a validated combinational circuit. */
inline BoolCircuit parse_blif( std::istream& in )
{
  BoolCircuit circ;

  std::vector<detail::BlifNames> blocks;
  bool saw_model = false;
  bool saw_end = false;

  std::string raw;
  int lineno = 0;
  while ( std::getline( in, raw ) && !saw_end )
  {
    ++lineno;
    const int first_line = lineno;
    // join continuation lines before looking at the content
    while ( !raw.empty() && raw.back() == '\\' )
    {
      raw.pop_back();
      std::string more;
      if ( !std::getline( in, more ) )
      {
        break;
      }
      ++lineno;
      raw += " " + more;
    }
    const auto hash = raw.find( '#' );
    if ( hash != std::string::npos )
    {
      raw = raw.substr( 0, hash );
    }
    auto toks = detail::split_tokens( raw );
    if ( toks.empty() )
    {
      continue;
    }

    const std::string& head = toks[0];
    if ( head == ".model" )
    {
      if ( toks.size() >= 2 )
      {
        circ.name = toks[1];
      }
      saw_model = true;
    }
    else if ( head == ".inputs" )
    {
      for ( size_t i = 1; i < toks.size(); ++i )
      {
        circ.add_input( toks[i] );
      }
    }
    else if ( head == ".outputs" )
    {
      for ( size_t i = 1; i < toks.size(); ++i )
      {
        circ.add_output( toks[i] );
      }
    }
    else if ( head == ".names" )
    {
      if ( toks.size() < 2 )
      {
        throw parse_error( ".names needs at least an output signal", first_line );
      }
      detail::BlifNames blk;
      blk.output = toks.back();
      blk.fanins.assign( toks.begin() + 1, toks.end() - 1 );
      blk.line = first_line;
      blocks.push_back( std::move( blk ) );
    }
    else if ( head == ".end" )
    {
      saw_end = true;
    }
    else if ( head[0] == '.' )
    {
      throw parse_error( "unsupported directive '" + head + "'", first_line );
    }
    else
    {
      // cover row of the most recent .names block
      if ( blocks.empty() )
      {
        throw parse_error( "cover row outside a .names block", first_line );
      }
      auto& blk = blocks.back();
      std::string plane;
      std::string outcol;
      if ( blk.fanins.empty() )
      {
        if ( toks.size() != 1 )
        {
          throw parse_error( "constant cover row must be a single column", first_line );
        }
        outcol = toks[0];
      }
      else
      {
        if ( toks.size() != 2 )
        {
          throw parse_error( "cover row must have an input plane and an output column",
                             first_line );
        }
        plane = toks[0];
        outcol = toks[1];
      }
      if ( plane.size() != blk.fanins.size() )
      {
        throw parse_error( "input plane has " + std::to_string( plane.size() ) +
                               " columns, .names has " + std::to_string( blk.fanins.size() ) +
                               " inputs",
                           first_line );
      }
      for ( char c : plane )
      {
        if ( c != '0' && c != '1' && c != '-' )
        {
          throw parse_error( std::string( "invalid plane character '" ) + c + "'", first_line );
        }
      }
      if ( outcol != "0" && outcol != "1" )
      {
        throw parse_error( "output column must be 0 or 1", first_line );
      }
      blk.rows.push_back( detail::BlifRow{ plane, outcol == "1", first_line } );
    }
  }

  if ( !saw_model )
  {
    throw parse_error( "missing .model" );
  }

  // collect every name in use so synthesized helper signals stay fresh
  std::unordered_set<std::string> taken( circ.inputs.begin(), circ.inputs.end() );
  for ( const auto& blk : blocks )
  {
    taken.insert( blk.output );
  }
  auto fresh = [&taken]( std::string base ) {
    while ( taken.count( base ) )
    {
      base += "_";
    }
    taken.insert( base );
    return base;
  };

  std::unordered_map<std::string, std::string> inverter_of;
  auto inverted = [&]( const std::string& sig, int line ) {
    auto it = inverter_of.find( sig );
    if ( it != inverter_of.end() )
    {
      return it->second;
    }
    const std::string name = fresh( sig + "_bar" );
    circ.add_gate( name, GateKind::Not, { sig }, line );
    inverter_of.emplace( sig, name );
    return name;
  };

  for ( const auto& blk : blocks )
  {
    // uniform output column is required; a mix has no single-gate reading
    for ( const auto& row : blk.rows )
    {
      if ( row.out != blk.rows.front().out )
      {
        throw parse_error( "cover mixes on-set and off-set rows", row.line );
      }
    }

    const bool onset = blk.rows.empty() || blk.rows.front().out;

    if ( blk.rows.empty() || blk.fanins.empty() )
    {
      // constant function; realized over an arbitrary primary input
      const bool value = !blk.rows.empty() && onset;
      if ( circ.inputs.empty() )
      {
        throw parse_error( "constant output needs at least one primary input", blk.line );
      }
      const auto& a = circ.inputs.front();
      circ.add_gate( blk.output, value ? GateKind::Xnor : GateKind::Xor, { a, a }, blk.line );
      continue;
    }

    // drop rows that constrain nothing (all '-'): such a row makes f constant
    bool tautology = false;
    for ( const auto& row : blk.rows )
    {
      if ( row.plane.find_first_not_of( '-' ) == std::string::npos )
      {
        tautology = true;
      }
    }
    if ( tautology )
    {
      const auto& a = circ.inputs.empty() ? blk.fanins.front() : circ.inputs.front();
      circ.add_gate( blk.output, onset ? GateKind::Xnor : GateKind::Xor, { a, a }, blk.line );
      continue;
    }

    // a lone literal needs no helper gates at all
    if ( blk.rows.size() == 1 &&
         blk.rows[0].plane.size() - std::count( blk.rows[0].plane.begin(),
                                                blk.rows[0].plane.end(), '-' ) == 1 )
    {
      const auto pos_in_plane = blk.rows[0].plane.find_first_not_of( '-' );
      const char pc = blk.rows[0].plane[pos_in_plane];
      const auto& src = blk.fanins[pos_in_plane];
      const bool pass = ( pc == '1' ) == onset;
      circ.add_gate( blk.output, pass ? GateKind::Buf : GateKind::Not, { src }, blk.line );
      continue;
    }

    // one signal per cube: a literal passes through, a product becomes AND
    std::vector<std::string> cube_signals;
    std::vector<std::vector<std::string>> cube_literals;
    for ( const auto& row : blk.rows )
    {
      std::vector<std::string> lits;
      for ( size_t i = 0; i < row.plane.size(); ++i )
      {
        if ( row.plane[i] == '1' )
        {
          lits.push_back( blk.fanins[i] );
        }
        else if ( row.plane[i] == '0' )
        {
          lits.push_back( inverted( blk.fanins[i], row.line ) );
        }
      }
      cube_literals.push_back( std::move( lits ) );
    }

    if ( blk.rows.size() == 1 )
    {
      circ.add_gate( blk.output, onset ? GateKind::And : GateKind::Nand, cube_literals.front(),
                     blk.line );
      continue;
    }

    for ( size_t c = 0; c < cube_literals.size(); ++c )
    {
      auto& lits = cube_literals[c];
      if ( lits.size() == 1 )
      {
        cube_signals.push_back( lits.front() );
      }
      else
      {
        const std::string name = fresh( blk.output + "_p" + std::to_string( c ) );
        circ.add_gate( name, GateKind::And, lits, blk.rows[c].line );
        cube_signals.push_back( name );
      }
    }
    circ.add_gate( blk.output, onset ? GateKind::Or : GateKind::Nor, cube_signals, blk.line );
  }

  circ.validate();
  return circ;
}

inline BoolCircuit read_blif( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw parse_error( "cannot open '" + path + "'" );
  }
  return parse_blif( in );
}

} // namespace tlgkit

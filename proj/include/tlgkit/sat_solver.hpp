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
  \file sat_solver.hpp
  \brief Conflict-driven clause learning SAT solver

  A compact CDCL solver in the MiniSat tradition: two watched literals,
  first-UIP conflict analysis, activity-driven branching with phase
  saving, and Luby-scheduled restarts.  The solver is deterministic:
  the same clause set with the same assumptions always takes the same
  path.  Learnt clauses are kept for the lifetime of the solver, which
  is fine at the problem sizes this library works with.

  An external DIMACS solver can be substituted through
  run_dimacs_solver, which exchanges the standard text format.
*/

#pragma once

#include "cnf.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

namespace tlgkit
{

enum class SolveStatus
{
  Sat,
  Unsat,
  Unknown
};

struct SolverStats
{
  uint64_t conflicts = 0;
  uint64_t decisions = 0;
  uint64_t propagations = 0;
};

class SatSolver
{
public:
  explicit SatSolver( int num_vars = 0 ) { ensure_vars( num_vars ); }

  /*! \brief Loads every clause of a formula. */
  explicit SatSolver( const CnfFormula& f )
  {
    ensure_vars( f.num_vars );
    for ( const auto& clause : f.clauses )
    {
      add_clause( clause );
    }
  }

  int num_vars() const { return static_cast<int>( values_.size() ); }

  int new_var()
  {
    ensure_vars( num_vars() + 1 );
    return num_vars();
  }

  /*! \brief Adds a clause of DIMACS literals; may grow the variable set. */
  void add_clause( std::vector<int> lits )
  {
    if ( !trail_limits_.empty() )
    {
      throw std::logic_error( "clauses can only be added between solves" );
    }
    for ( const int l : lits )
    {
      if ( l == 0 )
      {
        throw std::invalid_argument( "literal 0 is not allowed" );
      }
      ensure_vars( std::abs( l ) );
    }

    // normalize: sort, drop duplicates, drop satisfied/false-at-root lits
    std::vector<int> ls;
    for ( const int ext : lits )
    {
      ls.push_back( to_lit( ext ) );
    }
    std::sort( ls.begin(), ls.end() );
    ls.erase( std::unique( ls.begin(), ls.end() ), ls.end() );
    std::vector<int> kept;
    for ( size_t i = 0; i < ls.size(); ++i )
    {
      if ( i + 1 < ls.size() && ls[i + 1] == ( ls[i] ^ 1 ) )
      {
        return; // tautology
      }
      const int v = value_of_lit( ls[i] );
      if ( v == 1 )
      {
        return; // already satisfied at the root level
      }
      if ( v == 0 )
      {
        kept.push_back( ls[i] );
      }
    }

    if ( kept.empty() )
    {
      ok_ = false;
      return;
    }
    if ( kept.size() == 1 )
    {
      if ( !enqueue( kept[0], -1 ) )
      {
        ok_ = false;
      }
      else if ( propagate() != -1 )
      {
        ok_ = false;
      }
      return;
    }

    const int idx = static_cast<int>( clauses_.size() );
    clauses_.push_back( Clause{ std::move( kept ), false } );
    watch( clauses_[idx].lits[0], idx );
    watch( clauses_[idx].lits[1], idx );
  }

  /*! \brief Solves under optional assumptions and an optional time budget.

    A budget of zero means no limit.  Unknown is returned only when the
    budget runs out.
  */
  SolveStatus solve( const std::vector<int>& assumptions = {}, double budget_seconds = 0.0 )
  {
    assumptions_.clear();
    for ( const int ext : assumptions )
    {
      ensure_vars( std::abs( ext ) );
      assumptions_.push_back( to_lit( ext ) );
    }
    out_of_time_ = false;
    deadline_valid_ = budget_seconds > 0.0;
    if ( deadline_valid_ )
    {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>( budget_seconds ) );
    }

    if ( !ok_ )
    {
      return SolveStatus::Unsat;
    }
    if ( propagate() != -1 )
    {
      ok_ = false;
      return SolveStatus::Unsat;
    }

    SolveStatus result = SolveStatus::Unknown;
    for ( int restart = 0; result == SolveStatus::Unknown; ++restart )
    {
      const uint64_t bound = 100 * luby( restart );
      result = search( bound );
      if ( out_of_time_ )
      {
        break;
      }
    }
    cancel_until( 0 );
    return result;
  }

  /*! \brief Value of an external variable in the last model. */
  bool model_value( int var ) const
  {
    if ( var < 1 || var > static_cast<int>( model_.size() ) )
    {
      throw std::out_of_range( "variable outside the model" );
    }
    return model_[var - 1];
  }

  const std::vector<bool>& model() const { return model_; }
  const SolverStats& stats() const { return stats_; }

private:
  struct Clause
  {
    std::vector<int> lits; // internal literals
    bool learnt;
  };

  // ---- literal plumbing: internal literal = 2*var + (negated ? 1 : 0)
  static int to_lit( int ext ) { return 2 * ( std::abs( ext ) - 1 ) + ( ext < 0 ? 1 : 0 ); }
  static int lit_var( int l ) { return l >> 1; }
  static int lit_neg( int l ) { return l ^ 1; }

  // values_: 0 unassigned, 1 true, -1 false (per variable)
  int value_of_lit( int l ) const
  {
    const int v = values_[lit_var( l )];
    return ( l & 1 ) ? -v : v;
  }

  void ensure_vars( int n )
  {
    while ( static_cast<int>( values_.size() ) < n )
    {
      values_.push_back( 0 );
      levels_.push_back( 0 );
      reasons_.push_back( -1 );
      activity_.push_back( 0.0 );
      polarity_.push_back( false );
      seen_.push_back( false );
      heap_pos_.push_back( -1 );
      watches_.emplace_back();
      watches_.emplace_back();
      heap_insert( static_cast<int>( values_.size() ) - 1 );
    }
  }

  void watch( int lit, int clause_idx ) { watches_[lit_neg( lit )].push_back( clause_idx ); }

  bool enqueue( int l, int reason )
  {
    const int val = value_of_lit( l );
    if ( val != 0 )
    {
      return val == 1;
    }
    const int v = lit_var( l );
    values_[v] = ( l & 1 ) ? -1 : 1;
    levels_[v] = static_cast<int>( trail_limits_.size() );
    reasons_[v] = reason;
    trail_.push_back( l );
    return true;
  }

  /*! Runs unit propagation; returns a conflicting clause index or -1. */
  int propagate()
  {
    while ( qhead_ < trail_.size() )
    {
      const int p = trail_[qhead_++];
      ++stats_.propagations;
      auto& wl = watches_[p]; // clauses in which neg(p) is watched
      size_t keep = 0;
      for ( size_t i = 0; i < wl.size(); ++i )
      {
        const int ci = wl[i];
        auto& c = clauses_[ci];
        const int false_lit = lit_neg( p );
        if ( c.lits[0] == false_lit )
        {
          std::swap( c.lits[0], c.lits[1] );
        }
        if ( value_of_lit( c.lits[0] ) == 1 )
        {
          wl[keep++] = ci; // satisfied; keep the watch
          continue;
        }
        bool moved = false;
        for ( size_t k = 2; k < c.lits.size(); ++k )
        {
          if ( value_of_lit( c.lits[k] ) != -1 )
          {
            std::swap( c.lits[1], c.lits[k] );
            watch( c.lits[1], ci );
            moved = true;
            break;
          }
        }
        if ( moved )
        {
          continue;
        }
        wl[keep++] = ci;
        if ( !enqueue( c.lits[0], ci ) )
        {
          // conflict: retain the untouched tail of the watch list
          for ( ++i; i < wl.size(); ++i )
          {
            wl[keep++] = wl[i];
          }
          wl.resize( keep );
          qhead_ = trail_.size();
          return ci;
        }
      }
      wl.resize( keep );
    }
    return -1;
  }

  // ---- activity-ordered decision heap (max-heap keyed by activity, ties by index)
  bool heap_less( int a, int b ) const
  {
    return activity_[a] < activity_[b] || ( activity_[a] == activity_[b] && a > b );
  }

  void heap_up( int i )
  {
    const int v = heap_[i];
    while ( i > 0 && heap_less( heap_[( i - 1 ) / 2], v ) )
    {
      heap_[i] = heap_[( i - 1 ) / 2];
      heap_pos_[heap_[i]] = i;
      i = ( i - 1 ) / 2;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }

  void heap_down( int i )
  {
    const int v = heap_[i];
    const int n = static_cast<int>( heap_.size() );
    while ( 2 * i + 1 < n )
    {
      int child = 2 * i + 1;
      if ( child + 1 < n && heap_less( heap_[child], heap_[child + 1] ) )
      {
        ++child;
      }
      if ( !heap_less( v, heap_[child] ) )
      {
        break;
      }
      heap_[i] = heap_[child];
      heap_pos_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }

  void heap_insert( int v )
  {
    if ( heap_pos_[v] != -1 )
    {
      return;
    }
    heap_.push_back( v );
    heap_pos_[v] = static_cast<int>( heap_.size() ) - 1;
    heap_up( heap_pos_[v] );
  }

  int heap_pop()
  {
    const int v = heap_[0];
    heap_pos_[v] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if ( !heap_.empty() )
    {
      heap_pos_[heap_[0]] = 0;
      heap_down( 0 );
    }
    return v;
  }

  void bump_activity( int v )
  {
    activity_[v] += activity_inc_;
    if ( activity_[v] > 1e100 )
    {
      for ( auto& a : activity_ )
      {
        a *= 1e-100;
      }
      activity_inc_ *= 1e-100;
    }
    if ( heap_pos_[v] != -1 )
    {
      heap_up( heap_pos_[v] );
    }
  }

  void cancel_until( int level )
  {
    if ( static_cast<int>( trail_limits_.size() ) <= level )
    {
      return;
    }
    const size_t bound = trail_limits_[level];
    for ( size_t i = trail_.size(); i > bound; --i )
    {
      const int l = trail_[i - 1];
      const int v = lit_var( l );
      polarity_[v] = ( values_[v] == 1 );
      values_[v] = 0;
      reasons_[v] = -1;
      heap_insert( v );
    }
    trail_.resize( bound );
    trail_limits_.resize( level );
    qhead_ = bound;
  }

  /*! First-UIP conflict analysis; fills learnt_ and returns the backjump level. */
  int analyze( int confl )
  {
    learnt_.clear();
    learnt_.push_back( 0 ); // slot for the asserting literal
    int counter = 0;
    int p = -1;
    size_t index = trail_.size();
    const int current = static_cast<int>( trail_limits_.size() );

    do
    {
      const auto& c = clauses_[confl];
      for ( size_t j = ( p == -1 ? 0 : 1 ); j < c.lits.size(); ++j )
      {
        const int q = c.lits[j];
        const int v = lit_var( q );
        if ( !seen_[v] && levels_[v] > 0 )
        {
          seen_[v] = true;
          bump_activity( v );
          if ( levels_[v] >= current )
          {
            ++counter;
          }
          else
          {
            learnt_.push_back( q );
          }
        }
      }
      while ( !seen_[lit_var( trail_[index - 1] )] )
      {
        --index;
      }
      p = trail_[index - 1];
      --index;
      confl = reasons_[lit_var( p )];
      seen_[lit_var( p )] = false;
      --counter;
    } while ( counter > 0 );
    learnt_[0] = lit_neg( p );

    // drop literals implied by the rest of the learnt clause; every var
    // marked seen must be unmarked afterwards, removed literals included
    to_clear_ = learnt_;
    size_t kept = 1;
    for ( size_t i = 1; i < learnt_.size(); ++i )
    {
      const int v = lit_var( learnt_[i] );
      const int reason = reasons_[v];
      bool redundant = false;
      if ( reason != -1 )
      {
        redundant = true;
        for ( const int q : clauses_[reason].lits )
        {
          if ( lit_var( q ) != v && !seen_[lit_var( q )] && levels_[lit_var( q )] > 0 )
          {
            redundant = false;
            break;
          }
        }
      }
      if ( !redundant )
      {
        learnt_[kept++] = learnt_[i];
      }
    }
    learnt_.resize( kept );

    int backjump = 0;
    if ( learnt_.size() > 1 )
    {
      size_t best = 1;
      for ( size_t i = 2; i < learnt_.size(); ++i )
      {
        if ( levels_[lit_var( learnt_[i] )] > levels_[lit_var( learnt_[best] )] )
        {
          best = i;
        }
      }
      std::swap( learnt_[1], learnt_[best] );
      backjump = levels_[lit_var( learnt_[1] )];
    }
    for ( const int l : to_clear_ )
    {
      seen_[lit_var( l )] = false;
    }
    return backjump;
  }

  SolveStatus search( uint64_t conflict_bound )
  {
    uint64_t conflicts_here = 0;
    while ( true )
    {
      const int confl = propagate();
      if ( confl != -1 )
      {
        ++stats_.conflicts;
        ++conflicts_here;
        if ( trail_limits_.empty() )
        {
          ok_ = false;
          return SolveStatus::Unsat;
        }
        const int backjump = analyze( confl );
        cancel_until( backjump );
        if ( learnt_.size() == 1 )
        {
          enqueue( learnt_[0], -1 );
        }
        else
        {
          const int idx = static_cast<int>( clauses_.size() );
          clauses_.push_back( Clause{ learnt_, true } );
          watch( clauses_[idx].lits[0], idx );
          watch( clauses_[idx].lits[1], idx );
          enqueue( learnt_[0], idx );
        }
        activity_inc_ /= 0.95;
        if ( ( stats_.conflicts & 255u ) == 0 && deadline_valid_ &&
             std::chrono::steady_clock::now() > deadline_ )
        {
          out_of_time_ = true;
          return SolveStatus::Unknown;
        }
        continue;
      }

      if ( conflicts_here >= conflict_bound )
      {
        cancel_until( 0 );
        return SolveStatus::Unknown; // restart
      }

      // establish assumptions, then decide
      int next = -1;
      while ( trail_limits_.size() < assumptions_.size() )
      {
        const int a = assumptions_[trail_limits_.size()];
        const int val = value_of_lit( a );
        if ( val == 1 )
        {
          trail_limits_.push_back( trail_.size() ); // already holds
        }
        else if ( val == -1 )
        {
          return SolveStatus::Unsat; // assumptions contradict the formula
        }
        else
        {
          next = a;
          break;
        }
      }
      if ( next == -1 )
      {
        while ( !heap_.empty() && values_[heap_[0]] != 0 )
        {
          heap_pop();
        }
        if ( heap_.empty() )
        {
          model_.assign( values_.size(), false );
          for ( size_t v = 0; v < values_.size(); ++v )
          {
            model_[v] = values_[v] == 1;
          }
          return SolveStatus::Sat;
        }
        ++stats_.decisions;
        const int v = heap_pop();
        next = 2 * v + ( polarity_[v] ? 0 : 1 );
      }
      trail_limits_.push_back( trail_.size() );
      enqueue( next, -1 );
    }
  }

  static uint64_t luby( int i )
  {
    // the Luby restart sequence 1 1 2 1 1 2 4 ...
    int size = 1, seq = 0;
    while ( size < i + 1 )
    {
      ++seq;
      size = 2 * size + 1;
    }
    while ( size - 1 != i )
    {
      size = ( size - 1 ) / 2;
      --seq;
      i = i % size;
    }
    return uint64_t( 1 ) << seq;
  }

  bool ok_ = true;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_; // indexed by internal literal
  std::vector<int8_t> values_;
  std::vector<int> levels_;
  std::vector<int> reasons_;
  std::vector<int> trail_;
  std::vector<size_t> trail_limits_;
  size_t qhead_ = 0;

  std::vector<double> activity_;
  double activity_inc_ = 1.0;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::vector<bool> polarity_;
  std::vector<bool> seen_;
  std::vector<int> learnt_;
  std::vector<int> to_clear_;
  std::vector<int> assumptions_;

  std::vector<bool> model_;
  SolverStats stats_;
  bool deadline_valid_ = false;
  bool out_of_time_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

/*! \brief Result of delegating to an external DIMACS solver. */
struct ExternalSolveResult
{
  SolveStatus status = SolveStatus::Unknown;
  std::vector<bool> model;    // indexed by variable - 1
  int64_t conflicts = -1;     // -1 when the solver does not report them
  int64_t decisions = -1;
};

/*! \brief Runs `command <cnf-file>` and parses the solution output.

  The command receives a DIMACS file as its single extra argument and
  must print an `s SATISFIABLE` or `s UNSATISFIABLE` line, plus `v`
  lines with model literals when satisfiable.  Conflict and decision
  counts are scraped from the output when present.
*/
inline ExternalSolveResult run_dimacs_solver( const std::string& command, const CnfFormula& f )
{
  namespace fs = std::filesystem;
  static int counter = 0;
  const auto path = fs::temp_directory_path() /
                    ( "tlgkit-" + std::to_string( ::getpid() ) + "-" +
                      std::to_string( counter++ ) + ".cnf" );
  {
    std::ofstream out( path );
    if ( !out )
    {
      throw std::runtime_error( "cannot write " + path.string() );
    }
    write_dimacs( f, out );
  }

  const std::string cmd = command + " " + path.string() + " 2>/dev/null";
  FILE* pipe = ::popen( cmd.c_str(), "r" );
  if ( !pipe )
  {
    fs::remove( path );
    throw std::runtime_error( "cannot run '" + command + "'" );
  }
  std::string output;
  char buffer[4096];
  while ( size_t got = ::fread( buffer, 1, sizeof buffer, pipe ) )
  {
    output.append( buffer, got );
  }
  ::pclose( pipe );
  fs::remove( path );

  ExternalSolveResult result;
  result.model.assign( f.num_vars, false );
  std::istringstream lines( output );
  std::string line;
  while ( std::getline( lines, line ) )
  {
    if ( line.rfind( "s ", 0 ) == 0 )
    {
      if ( line.find( "UNSATISFIABLE" ) != std::string::npos )
      {
        result.status = SolveStatus::Unsat;
      }
      else if ( line.find( "SATISFIABLE" ) != std::string::npos )
      {
        result.status = SolveStatus::Sat;
      }
    }
    else if ( line.rfind( "v ", 0 ) == 0 )
    {
      std::istringstream vals( line.substr( 2 ) );
      int lit;
      while ( vals >> lit )
      {
        if ( lit != 0 && std::abs( lit ) <= f.num_vars )
        {
          result.model[std::abs( lit ) - 1] = lit > 0;
        }
      }
    }
    else
    {
      // stats lines in the style `c conflicts : 123` or `conflicts: 123`
      for ( const char* name : { "conflicts", "decisions" } )
      {
        const auto at = line.find( name );
        if ( at == std::string::npos )
        {
          continue;
        }
        const auto colon = line.find_first_of( ":", at );
        if ( colon == std::string::npos )
        {
          continue;
        }
        int64_t n;
        std::istringstream num( line.substr( colon + 1 ) );
        if ( num >> n )
        {
          ( *name == 'c' ? result.conflicts : result.decisions ) = n;
        }
      }
    }
  }
  return result;
}

} // namespace tlgkit

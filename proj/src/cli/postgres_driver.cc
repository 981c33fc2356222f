// Copyright 2026 The shredq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shredq/ast/error.h"
#include "shredq/cli/db_driver.h"

#ifdef SHREDQ_WITH_POSTGRES
#include <dlfcn.h>
#endif

namespace shredq {

#ifdef SHREDQ_WITH_POSTGRES

namespace {

// The subset of the libpq C API used here.
extern "C" {
using PGconn = struct pg_conn;
using PGresult = struct pg_result;
using ConnectFn = PGconn* (*)(const char*);
using StatusFn = int (*)(const PGconn*);
using ErrorFn = char* (*)(const PGconn*);
using FinishFn = void (*)(PGconn*);
using ExecFn = PGresult* (*)(PGconn*, const char*);
using ResultStatusFn = int (*)(const PGresult*);
using ResultErrorFn = char* (*)(const PGresult*);
using ClearFn = void (*)(PGresult*);
using CountFn = int (*)(const PGresult*);
using NameFn = char* (*)(const PGresult*, int);
using GetValueFn = char* (*)(const PGresult*, int, int);
using GetIsNullFn = int (*)(const PGresult*, int, int);
}

constexpr int kConnectionOk = 0;
constexpr int kCommandOk = 1;
constexpr int kTuplesOk = 2;

struct LibPq {
  void* handle = nullptr;
  ConnectFn connectdb = nullptr;
  StatusFn status = nullptr;
  ErrorFn error_message = nullptr;
  FinishFn finish = nullptr;
  ExecFn exec = nullptr;
  ResultStatusFn result_status = nullptr;
  ResultErrorFn result_error = nullptr;
  ClearFn clear = nullptr;
  CountFn ntuples = nullptr;
  CountFn nfields = nullptr;
  NameFn fname = nullptr;
  GetValueFn getvalue = nullptr;
  GetIsNullFn getisnull = nullptr;
};

template <typename F>
void Bind(void* handle, const char* name, F& out) {
  void* sym = dlsym(handle, name);
  if (sym == nullptr)
    Fail(ErrorCode::kDatabase, std::string("libpq lacks ") + name);
  out = reinterpret_cast<F>(sym);
}

const LibPq& Load() {
  static const LibPq lib = [] {
    LibPq l;
    l.handle = dlopen("libpq.so.5", RTLD_NOW | RTLD_LOCAL);
    if (l.handle == nullptr)
      l.handle = dlopen("libpq.so", RTLD_NOW | RTLD_LOCAL);
    if (l.handle == nullptr) return l;
    Bind(l.handle, "PQconnectdb", l.connectdb);
    Bind(l.handle, "PQstatus", l.status);
    Bind(l.handle, "PQerrorMessage", l.error_message);
    Bind(l.handle, "PQfinish", l.finish);
    Bind(l.handle, "PQexec", l.exec);
    Bind(l.handle, "PQresultStatus", l.result_status);
    Bind(l.handle, "PQresultErrorMessage", l.result_error);
    Bind(l.handle, "PQclear", l.clear);
    Bind(l.handle, "PQntuples", l.ntuples);
    Bind(l.handle, "PQnfields", l.nfields);
    Bind(l.handle, "PQfname", l.fname);
    Bind(l.handle, "PQgetvalue", l.getvalue);
    Bind(l.handle, "PQgetisnull", l.getisnull);
    return l;
  }();
  if (lib.handle == nullptr) Fail(ErrorCode::kDatabase, "cannot load libpq");
  return lib;
}

class PostgresDriver : public DbDriver {
 public:
  explicit PostgresDriver(const std::string& dsn) : lib_(Load()) {
    conn_ = lib_.connectdb(dsn.c_str());
    if (conn_ == nullptr || lib_.status(conn_) != kConnectionOk) {
      std::string msg = conn_ ? lib_.error_message(conn_) : "out of memory";
      Close();
      Fail(ErrorCode::kDatabase, "cannot connect: " + msg);
    }
    Execute("SET client_min_messages TO WARNING");
  }

  ~PostgresDriver() override { Close(); }

  ResultSet Execute(const std::string& sql) override {
    if (conn_ == nullptr) Fail(ErrorCode::kDatabase, "connection is closed");
    PGresult* res = lib_.exec(conn_, sql.c_str());
    if (res == nullptr) {
      Fail(ErrorCode::kDatabase,
           std::string("query failed: ") + lib_.error_message(conn_));
    }
    int status = lib_.result_status(res);
    if (status != kCommandOk && status != kTuplesOk) {
      std::string msg = lib_.result_error(res);
      lib_.clear(res);
      Fail(ErrorCode::kDatabase, "query failed: " + msg);
    }
    ResultSet out;
    int fields = lib_.nfields(res);
    int tuples = lib_.ntuples(res);
    for (int f = 0; f < fields; ++f) out.columns.push_back(lib_.fname(res, f));
    out.rows.reserve(tuples);
    for (int t = 0; t < tuples; ++t) {
      std::vector<std::optional<std::string>> row;
      for (int f = 0; f < fields; ++f) {
        if (lib_.getisnull(res, t, f)) {
          row.emplace_back();
        } else {
          row.emplace_back(lib_.getvalue(res, t, f));
        }
      }
      out.rows.push_back(std::move(row));
    }
    lib_.clear(res);
    return out;
  }

  void Ping() override { Execute("SELECT 1"); }

  void Close() override {
    if (conn_ != nullptr) lib_.finish(conn_);
    conn_ = nullptr;
  }

 private:
  const LibPq& lib_;
  PGconn* conn_ = nullptr;
};

}  // namespace

std::unique_ptr<DbDriver> ConnectPostgres(const std::string& dsn) {
  return std::make_unique<PostgresDriver>(dsn);
}

#else

std::unique_ptr<DbDriver> ConnectPostgres(const std::string& dsn) {
  Fail(ErrorCode::kDatabase, "built without PostgreSQL support");
}

#endif

}  // namespace shredq
